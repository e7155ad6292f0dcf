#include "mubkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mubkit/errors.hpp"

namespace mubkit {

bool ComplexMatrix::has_finite_entries() const {
    for (const Complex& z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("matmul: inner dimensions differ (" + std::to_string(a.cols()) +
                         " vs " + std::to_string(b.rows()) + ")");
    }
    ComplexMatrix out(a.rows(), b.cols());
    const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            const Complex ail = a(i, l);
            if (ail == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < m; ++j) {
                out(i, j) += ail * b(l, j);
            }
        }
    }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia) {
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const Complex f = a(ia, ja);
            if (f == Complex{0.0, 0.0}) continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib) {
                for (std::size_t jb = 0; jb < b.cols(); ++jb) {
                    out(ia * b.rows() + ib, ja * b.cols() + jb) = f * b(ib, jb);
                }
            }
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dA, std::size_t dB,
                            Subsystem keep) {
    const std::size_t side = dA * dB;
    if (m.rows() != side || m.cols() != side) {
        throw ShapeError("partial_trace: matrix side " + std::to_string(m.rows()) +
                         "x" + std::to_string(m.cols()) + " does not equal dA*dB = " +
                         std::to_string(side));
    }
    if (keep == Subsystem::A) {
        ComplexMatrix out(dA, dA);
        for (std::size_t i = 0; i < dA; ++i) {
            for (std::size_t j = 0; j < dA; ++j) {
                Complex s{0.0, 0.0};
                for (std::size_t k = 0; k < dB; ++k) {
                    s += m(i * dB + k, j * dB + k);
                }
                out(i, j) = s;
            }
        }
        return out;
    }
    ComplexMatrix out(dB, dB);
    for (std::size_t i = 0; i < dB; ++i) {
        for (std::size_t j = 0; j < dB; ++j) {
            Complex s{0.0, 0.0};
            for (std::size_t k = 0; k < dA; ++k) {
                s += m(k * dB + i, k * dB + j);
            }
            out(i, j) = s;
        }
    }
    return out;
}

double hs_norm_sq(const ComplexMatrix& a) {
    double s = 0.0;
    for (const Complex& z : a.entries()) s += std::norm(z);
    return s;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) s += std::norm(a(i, j));
        }
    }
    return std::sqrt(s);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, double tol) {
    if (a.rows() != a.cols()) {
        throw ShapeError("hermitian_eigenvalues: matrix is not square");
    }
    const double herm_dev = max_hermiticity_deviation(a);
    if (herm_dev > tol) {
        throw DomainError("hermitian_eigenvalues: input deviates from Hermitian by " +
                          std::to_string(herm_dev) + " (tol " + std::to_string(tol) + ")");
    }
    const std::size_t n = a.rows();

    // work on the symmetrized copy so rounding in the input cannot produce
    // complex eigenvalues
    ComplexMatrix w(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            w(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
        }
    }

    const double norm = std::sqrt(hs_norm_sq(w));
    const double stop = 1e-14 * norm;
    constexpr int kMaxSweeps = 100;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(w) <= stop) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex g = w(p, q);
                const double gabs = std::abs(g);
                if (gabs == 0.0) continue;
                const double alpha = w(p, p).real();
                const double beta = w(q, q).real();
                // complex Givens rotation zeroing w(p,q):
                // tan(2 theta) = 2|g| / (alpha - beta), phase = g/|g|
                const double theta = 0.5 * std::atan2(2.0 * gabs, alpha - beta);
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                const Complex phase = g / gabs;

                // columns: col_p' = c*col_p + s*conj(phase)*col_q,
                //          col_q' = -s*phase*col_p + c*col_q; rows by symmetry
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex wkp = w(k, p);
                    const Complex wkq = w(k, q);
                    w(k, p) = c * wkp + s * std::conj(phase) * wkq;
                    w(k, q) = -s * phase * wkp + c * wkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex wpk = w(p, k);
                    const Complex wqk = w(q, k);
                    w(p, k) = c * wpk + s * phase * wqk;
                    w(q, k) = -s * std::conj(phase) * wpk + c * wqk;
                }
                w(p, q) = Complex{0.0, 0.0};
                w(q, p) = Complex{0.0, 0.0};
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = w(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

ComplexMatrix unitary_from_gaussian(std::size_t d, RandomStream& rng) {
    ComplexMatrix u(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            u(i, j) = rng.next_complex_gaussian();
        }
    }
    // modified Gram-Schmidt, two passes; R diagonal = column norms > 0, which
    // is the sign convention that makes the output Haar
    for (std::size_t j = 0; j < d; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                Complex proj{0.0, 0.0};
                for (std::size_t i = 0; i < d; ++i) proj += std::conj(u(i, k)) * u(i, j);
                for (std::size_t i = 0; i < d; ++i) u(i, j) -= proj * u(i, k);
            }
        }
        double nrm = 0.0;
        for (std::size_t i = 0; i < d; ++i) nrm += std::norm(u(i, j));
        nrm = std::sqrt(nrm);
        for (std::size_t i = 0; i < d; ++i) u(i, j) /= nrm;
    }
    return u;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.same_shape(b)) throw ShapeError("add: shape mismatch");
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < out.entries().size(); ++i) out.entries()[i] += b.entries()[i];
    return out;
}

ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.same_shape(b)) throw ShapeError("sub: shape mismatch");
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < out.entries().size(); ++i) out.entries()[i] -= b.entries()[i];
    return out;
}

ComplexMatrix scale(const ComplexMatrix& a, Complex factor) {
    ComplexMatrix out = a;
    for (Complex& z : out.entries()) z *= factor;
    return out;
}

Complex trace(const ComplexMatrix& a) {
    Complex s{0.0, 0.0};
    const std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < n; ++i) s += a(i, i);
    return s;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.same_shape(b)) throw ShapeError("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return m;
}

double max_hermiticity_deviation(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) throw ShapeError("max_hermiticity_deviation: not square");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return m;
}

}  // namespace mubkit
