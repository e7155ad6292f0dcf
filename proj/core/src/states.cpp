#include "mubkit/states.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "mubkit/errors.hpp"

namespace mubkit {

namespace {

// rho = G G^dag / tr(G G^dag), G side x rank of standard complex Gaussians
ComplexMatrix ginibre_density(std::size_t side, std::size_t rank, RandomStream& rng) {
    ComplexMatrix g(side, rank);
    for (std::size_t i = 0; i < side; ++i) {
        for (std::size_t j = 0; j < rank; ++j) {
            g(i, j) = rng.next_complex_gaussian();
        }
    }
    ComplexMatrix rho(side, side);
    double tr = 0.0;
    for (std::size_t i = 0; i < side; ++i) {
        for (std::size_t j = i; j < side; ++j) {
            Complex s{0.0, 0.0};
            for (std::size_t k = 0; k < rank; ++k) s += g(i, k) * std::conj(g(j, k));
            rho(i, j) = s;
            rho(j, i) = std::conj(s);
        }
        tr += rho(i, i).real();
    }
    const double inv = 1.0 / tr;
    for (Complex& z : rho.entries()) z *= inv;
    // exact real diagonal
    for (std::size_t i = 0; i < side; ++i) rho(i, i) = Complex{rho(i, i).real(), 0.0};
    return rho;
}

}  // namespace

std::vector<std::string> density_invariant_violations(const ComplexMatrix& mat) {
    std::vector<std::string> out;
    if (mat.rows() != mat.cols()) {
        out.push_back("matrix is not square (" + std::to_string(mat.rows()) + "x" +
                      std::to_string(mat.cols()) + ")");
        return out;
    }
    if (!mat.has_finite_entries()) {
        out.push_back("entries contain NaN or Inf");
        return out;
    }
    const double herm = max_hermiticity_deviation(mat);
    if (herm > kHermitianTol) {
        out.push_back("Hermiticity deviation " + std::to_string(herm) + " exceeds 1e-12");
    }
    const double tr_dev = std::abs(trace(mat) - Complex{1.0, 0.0});
    if (tr_dev > kTraceTol) {
        out.push_back("trace deviates from 1 by " + std::to_string(tr_dev));
    }
    if (herm <= 1e-8) {  // eigenvalues only meaningful for near-Hermitian input
        const auto eig = hermitian_eigenvalues(mat, 1e-8);
        if (!eig.empty() && eig.front() < -kPsdTol) {
            out.push_back("minimum eigenvalue " + std::to_string(eig.front()) +
                          " below -1e-10");
        }
    }
    return out;
}

DensityMatrix random_pure(std::size_t d, RandomStream& rng) {
    if (d < 2) throw DomainError("random_pure: d must be >= 2");
    std::vector<Complex> psi(d);
    double nrm = 0.0;
    for (Complex& z : psi) {
        z = rng.next_complex_gaussian();
        nrm += std::norm(z);
    }
    nrm = std::sqrt(nrm);
    for (Complex& z : psi) z /= nrm;

    DensityMatrix rho{d, ComplexMatrix(d, d)};
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            rho.mat(i, j) = psi[i] * std::conj(psi[j]);
        }
    }
    return rho;
}

DensityMatrix random_density(std::size_t d, std::size_t rank, RandomStream& rng) {
    if (d < 2) throw DomainError("random_density: d must be >= 2");
    if (rank < 1 || rank > d) {
        throw DomainError("random_density: rank " + std::to_string(rank) +
                          " outside [1, " + std::to_string(d) + "]");
    }
    return {d, ginibre_density(d, rank, rng)};
}

BipartiteState random_bipartite(std::size_t d, std::size_t rank, RandomStream& rng) {
    if (d < 2) throw DomainError("random_bipartite: d must be >= 2");
    const std::size_t side = d * d;
    if (rank < 1 || rank > side) {
        throw DomainError("random_bipartite: rank " + std::to_string(rank) +
                          " outside [1, " + std::to_string(side) + "]");
    }
    return {d, ginibre_density(side, rank, rng)};
}

BipartiteState maximally_entangled(std::size_t d) {
    if (d < 2) throw DomainError("maximally_entangled: d must be >= 2");
    const std::size_t side = d * d;
    BipartiteState s{d, ComplexMatrix(side, side)};
    const double amp = 1.0 / static_cast<double>(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            s.mat(i * d + i, j * d + j) = amp;
        }
    }
    return s;
}

BipartiteState product_state(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.d != b.d) {
        throw ShapeError("product_state: dimensions differ (" + std::to_string(a.d) +
                         " vs " + std::to_string(b.d) + ")");
    }
    return {a.d, kron(a.mat, b.mat)};
}

BipartiteState classical_correlated(std::size_t d) {
    if (d < 2) throw DomainError("classical_correlated: d must be >= 2");
    BipartiteState s{d, ComplexMatrix(d * d, d * d)};
    const double w = 1.0 / static_cast<double>(d);
    for (std::size_t i = 0; i < d; ++i) {
        s.mat(i * d + i, i * d + i) = w;
    }
    return s;
}

std::pair<DensityMatrix, DensityMatrix> marginals(const BipartiteState& s) {
    DensityMatrix a{s.d, partial_trace(s.mat, s.d, s.d, Subsystem::A)};
    DensityMatrix b{s.d, partial_trace(s.mat, s.d, s.d, Subsystem::B)};
    return {std::move(a), std::move(b)};
}

namespace {

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const nlohmann::json& rows) {
    if (!rows.is_array() || rows.empty()) throw FormatError("state file: 'rho' must be a non-empty array");
    const std::size_t n = rows.size();
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != n) {
            throw FormatError("state file: 'rho' row " + std::to_string(i) +
                              " has wrong length (matrix must be square)");
        }
        for (std::size_t j = 0; j < n; ++j) {
            const auto& c = row[j];
            if (!c.is_array() || c.size() != 2) {
                throw FormatError("state file: entries must be [re, im] pairs");
            }
            m(i, j) = Complex{c[0].get<double>(), c[1].get<double>()};
        }
    }
    return m;
}

void write_state_json(const nlohmann::json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("save_state: cannot open '" + path + "' for writing");
    out << j.dump(2) << '\n';
}

}  // namespace

void save_state(const DensityMatrix& rho, const std::string& path) {
    nlohmann::json j;
    j["d"] = rho.d;
    j["bipartite"] = false;
    j["rho"] = matrix_to_json(rho.mat);
    write_state_json(j, path);
}

void save_state(const BipartiteState& s, const std::string& path) {
    nlohmann::json j;
    j["d"] = s.d;
    j["bipartite"] = true;
    j["rho"] = matrix_to_json(s.mat);
    write_state_json(j, path);
}

LoadedState load_state(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("load_state: cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("load_state: '" + path + "' is not valid JSON: " + e.what());
    }

    LoadedState out;
    std::size_t d = 0;
    ComplexMatrix mat;
    try {
        d = j.at("d").get<std::size_t>();
        out.bipartite = j.at("bipartite").get<bool>();
        mat = matrix_from_json(j.at("rho"));
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("load_state: schema error in '" + path + "': " + e.what());
    }

    const std::size_t expected_side = out.bipartite ? d * d : d;
    if (mat.rows() != expected_side) {
        throw FormatError("load_state: 'rho' side " + std::to_string(mat.rows()) +
                          " does not match d=" + std::to_string(d) +
                          (out.bipartite ? " (bipartite, expected d^2)" : ""));
    }

    const auto violations = density_invariant_violations(mat);
    if (!violations.empty()) {
        std::string msg = "load_state: '" + path + "' fails density invariants:";
        for (const auto& v : violations) msg += " [" + v + "]";
        throw IntegrityError(msg);
    }

    if (out.bipartite) {
        out.joint = BipartiteState{d, std::move(mat)};
    } else {
        out.single = DensityMatrix{d, std::move(mat)};
    }
    return out;
}

}  // namespace mubkit
