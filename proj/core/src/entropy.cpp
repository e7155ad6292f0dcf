#include "mubkit/entropy.hpp"

#include <cmath>
#include <string>

#include "mubkit/errors.hpp"

namespace mubkit {

namespace {

constexpr double kEigenvalueFloor = 1e-12;

// tr rho^2 == sum |rho_ij|^2 for Hermitian rho
double purity(const ComplexMatrix& rho) { return hs_norm_sq(rho); }

double linear_entropy_of(const ComplexMatrix& rho) {
    const double side = static_cast<double>(rho.rows());
    double v = side * (1.0 - purity(rho));
    // roundoff fence: the functional's range is [0, side-1] for valid states
    if (v < 0.0 && v > -1e-10 * side) v = 0.0;
    if (v > side - 1.0 && v < side - 1.0 + 1e-10 * side) v = side - 1.0;
    return v;
}

double vn_entropy_of(const ComplexMatrix& rho) {
    double s = 0.0;
    for (double lambda : hermitian_eigenvalues(rho, 1e-8)) {
        if (lambda > kEigenvalueFloor) s -= lambda * std::log2(lambda);
    }
    return s;
}

}  // namespace

EntropyValue linear_entropy(const DensityMatrix& rho) {
    return {linear_entropy_of(rho.mat), EntropyKind::Linear};
}

EntropyValue linear_entropy(const BipartiteState& s) {
    return {linear_entropy_of(s.mat), EntropyKind::Linear};
}

std::vector<ComplexMatrix> measurement_blocks(const BipartiteState& s,
                                              const OrthonormalBasis& basis) {
    const std::size_t d = s.d;
    if (basis.d != d) {
        throw ShapeError("measurement_blocks: basis dimension " + std::to_string(basis.d) +
                         " does not match state dimension " + std::to_string(d));
    }
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(d);
    ComplexMatrix pn(d, d);  // partial contraction sum_m conj(v[m]) R[m][n]
    for (std::size_t i = 0; i < d; ++i) {
        const auto& v = basis.vectors[i];
        ComplexMatrix b(d, d);
        for (std::size_t n = 0; n < d; ++n) {
            // pn = sum_m conj(v[m]) * (block row m, block col n of rho)
            for (auto& z : pn.entries()) z = Complex{0.0, 0.0};
            for (std::size_t m = 0; m < d; ++m) {
                const Complex cm = std::conj(v[m]);
                if (cm == Complex{0.0, 0.0}) continue;
                for (std::size_t j = 0; j < d; ++j) {
                    for (std::size_t k = 0; k < d; ++k) {
                        pn(j, k) += cm * s.mat(m * d + j, n * d + k);
                    }
                }
            }
            const Complex vn = v[n];
            if (vn == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < d; ++j) {
                for (std::size_t k = 0; k < d; ++k) {
                    b(j, k) += vn * pn(j, k);
                }
            }
        }
        // symmetrize away the contraction-order roundoff
        for (std::size_t j = 0; j < d; ++j) {
            b(j, j) = Complex{b(j, j).real(), 0.0};
            for (std::size_t k = j + 1; k < d; ++k) {
                const Complex avg = 0.5 * (b(j, k) + std::conj(b(k, j)));
                b(j, k) = avg;
                b(k, j) = std::conj(avg);
            }
        }
        blocks.push_back(std::move(b));
    }
    return blocks;
}

BipartiteState measure_A(const BipartiteState& s, const OrthonormalBasis& basis) {
    const std::size_t d = s.d;
    const auto blocks = measurement_blocks(s, basis);
    BipartiteState out{d, ComplexMatrix(d * d, d * d)};
    for (std::size_t i = 0; i < d; ++i) {
        const auto& v = basis.vectors[i];
        const ComplexMatrix& b = blocks[i];
        for (std::size_t m = 0; m < d; ++m) {
            for (std::size_t n = 0; n < d; ++n) {
                const Complex proj = v[m] * std::conj(v[n]);  // |i><i| entry (m,n)
                if (proj == Complex{0.0, 0.0}) continue;
                for (std::size_t j = 0; j < d; ++j) {
                    for (std::size_t k = 0; k < d; ++k) {
                        out.mat(m * d + j, n * d + k) += proj * b(j, k);
                    }
                }
            }
        }
    }
    return out;
}

EntropyValue cond_linear_entropy_post(const BipartiteState& s_post, const DensityMatrix& rhoB) {
    const std::size_t d = s_post.d;
    if (rhoB.d != d) {
        throw ShapeError("cond_linear_entropy_post: marginal dimension mismatch");
    }
    const ComplexMatrix traced = partial_trace(s_post.mat, d, d, Subsystem::B);
    const double marg_dev = max_abs_diff(traced, rhoB.mat);
    if (marg_dev > 1e-10) {
        throw DomainError("cond_linear_entropy_post: rhoB deviates from the B marginal of "
                          "the post-measurement state by " + std::to_string(marg_dev));
    }
    const double dd = static_cast<double>(d);
    const double value = dd * purity(rhoB.mat) - dd * dd * purity(s_post.mat) + (dd * dd - dd);
    // definitional route as self-check
    const double definitional =
        linear_entropy_of(s_post.mat) - linear_entropy_of(rhoB.mat);
    if (std::abs(value - definitional) > 1e-10) {
        throw DomainError("cond_linear_entropy_post: closed forms disagree by " +
                          std::to_string(std::abs(value - definitional)));
    }
    return {value, EntropyKind::LinearConditional};
}

EntropyValue cond_linear_entropy_AB(const BipartiteState& s) {
    const double dd = static_cast<double>(s.d);
    const ComplexMatrix rhoB = partial_trace(s.mat, s.d, s.d, Subsystem::B);
    const double value = dd * purity(rhoB) - dd * dd * purity(s.mat) + (dd * dd - dd);
    return {value, EntropyKind::LinearConditional};
}

EntropyValue linear_mutual_information(const BipartiteState& s) {
    const auto [rhoA, rhoB] = marginals(s);
    const ComplexMatrix diff = sub(s.mat, kron(rhoA.mat, rhoB.mat));
    return {hs_norm_sq(diff), EntropyKind::LinearMutualInfo};
}

EntropyValue von_neumann_entropy(const DensityMatrix& rho) {
    return {vn_entropy_of(rho.mat), EntropyKind::VonNeumann};
}

EntropyValue von_neumann_entropy(const BipartiteState& s) {
    return {vn_entropy_of(s.mat), EntropyKind::VonNeumann};
}

EntropyValue cond_vn(const BipartiteState& s) {
    const ComplexMatrix rhoB = partial_trace(s.mat, s.d, s.d, Subsystem::B);
    return {vn_entropy_of(s.mat) - vn_entropy_of(rhoB), EntropyKind::VnConditional};
}

double check_eq1_von_neumann(const BipartiteState& s, const OrthonormalBasis& theta,
                             const OrthonormalBasis& tau) {
    const double dev = verify_unbiased(theta, tau);
    if (dev > kUnbiasednessTol) {
        throw DomainError("check_eq1_von_neumann: bases '" + theta.label + "' and '" +
                          tau.label + "' are not unbiased (deviation " +
                          std::to_string(dev) + ")");
    }
    const double s_theta = cond_vn(measure_A(s, theta)).value;
    const double s_tau = cond_vn(measure_A(s, tau)).value;
    const double s_ab = cond_vn(s).value;
    const double lhs = s_theta + s_tau;
    const double rhs = std::log2(static_cast<double>(s.d)) + s_ab;
    return lhs - rhs;
}

double purity_from_blocks(const std::vector<ComplexMatrix>& blocks) {
    double s = 0.0;
    for (const auto& b : blocks) s += hs_norm_sq(b);
    return s;
}

double mutual_info_from_blocks(const std::vector<ComplexMatrix>& blocks,
                               const ComplexMatrix& rhoB) {
    double sum_tr_b2 = 0.0;
    double cross = 0.0;
    double sum_p2 = 0.0;
    for (const auto& b : blocks) {
        sum_tr_b2 += hs_norm_sq(b);
        const double p = trace(b).real();
        sum_p2 += p * p;
        // tr(B_i rho_B) real for Hermitian factors
        double t = 0.0;
        for (std::size_t j = 0; j < b.rows(); ++j) {
            for (std::size_t k = 0; k < b.cols(); ++k) {
                t += (b(j, k) * rhoB(k, j)).real();
            }
        }
        cross += p * t;
    }
    return sum_tr_b2 - 2.0 * cross + sum_p2 * hs_norm_sq(rhoB);
}

double vn_entropy_from_blocks(const std::vector<ComplexMatrix>& blocks) {
    double s = 0.0;
    for (const auto& b : blocks) {
        for (double lambda : hermitian_eigenvalues(b, 1e-8)) {
            if (lambda > kEigenvalueFloor) s -= lambda * std::log2(lambda);
        }
    }
    return s;
}

}  // namespace mubkit
