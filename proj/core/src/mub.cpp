#include "mubkit/mub.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>
#include <string>

#include <json.hpp>

#include "mubkit/errors.hpp"
#include "mubkit/galois.hpp"

namespace mubkit {

namespace {

using std::numbers::pi;

Complex inner(const std::vector<Complex>& u, const std::vector<Complex>& v) {
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
    return s;
}

// global phase convention: first nonzero component made real-positive
void fix_phase(std::vector<Complex>& v) {
    for (const Complex& c : v) {
        const double m = std::abs(c);
        if (m > 1e-14) {
            const Complex rot = std::conj(c) / m;
            for (Complex& z : v) z *= rot;
            return;
        }
    }
}

bool decompose_prime_power(std::size_t d, int& p, int& n) {
    if (d < 2) return false;
    std::size_t rest = d;
    int smallest = 0;
    for (int f = 2; static_cast<std::size_t>(f) * f <= d; ++f) {
        if (rest % f == 0) {
            smallest = f;
            break;
        }
    }
    if (smallest == 0) {  // d itself prime
        p = static_cast<int>(d);
        n = 1;
        return true;
    }
    p = smallest;
    n = 0;
    while (rest % p == 0) {
        rest /= p;
        ++n;
    }
    return rest == 1;
}

// quadratic Gauss-phase bases over GF(q), odd q: basis a, vector b, coordinate
// x -> w_p^{tr(a x^2 + b x)} / sqrt(q)
std::vector<OrthonormalBasis> wootters_fields_bases(int p, int n) {
    const GaloisField field(p, n);
    const std::size_t q = static_cast<std::size_t>(field.q());
    const auto elements = field.enumerate();
    const double inv_sqrt_q = 1.0 / std::sqrt(static_cast<double>(q));

    std::vector<OrthonormalBasis> out;
    out.reserve(q);
    for (std::size_t ai = 0; ai < q; ++ai) {
        const FieldElement& a = elements[ai];
        OrthonormalBasis basis;
        basis.d = q;
        basis.label = "WF-a=" + std::to_string(ai);
        basis.vectors.resize(q, std::vector<Complex>(q));
        for (std::size_t bi = 0; bi < q; ++bi) {
            const FieldElement& b = elements[bi];
            for (std::size_t xi = 0; xi < q; ++xi) {
                const FieldElement& x = elements[xi];
                const FieldElement ax2 = field.mul(a, field.mul(x, x));
                const FieldElement bx = field.mul(b, x);
                const int e = field.trace(field.add(ax2, bx));
                basis.vectors[bi][xi] =
                    std::polar(inv_sqrt_q, 2.0 * pi * static_cast<double>(e) /
                                               static_cast<double>(p));
            }
            fix_phase(basis.vectors[bi]);
        }
        out.push_back(std::move(basis));
    }
    return out;
}

// Pauli x and y eigenbases; the z eigenbasis is the computational basis
std::vector<OrthonormalBasis> pauli_bases_d2() {
    const double s = 1.0 / std::sqrt(2.0);
    const Complex i{0.0, 1.0};
    OrthonormalBasis x{2, {{s, s}, {s, -s}}, "pauli-x"};
    OrthonormalBasis y{2, {{s, s * i}, {s, -s * i}}, "pauli-y"};
    return {x, y};
}

template <std::size_t D>
std::vector<OrthonormalBasis> bases_from_tables(const unsigned char (&table)[D][D][D]) {
    static const Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(D));
    std::vector<OrthonormalBasis> out;
    out.reserve(D);
    for (std::size_t a = 0; a < D; ++a) {
        OrthonormalBasis basis;
        basis.d = D;
        basis.label = "GR-a=" + std::to_string(a);
        basis.vectors.resize(D, std::vector<Complex>(D));
        for (std::size_t b = 0; b < D; ++b) {
            for (std::size_t x = 0; x < D; ++x) {
                basis.vectors[b][x] = inv_sqrt_d * kPhases[table[a][b][x] & 3];
            }
            fix_phase(basis.vectors[b]);
        }
        out.push_back(std::move(basis));
    }
    return out;
}

}  // namespace

OrthonormalBasis computational_basis(std::size_t d) {
    if (d < 2) throw DomainError("computational_basis: d must be >= 2");
    OrthonormalBasis b;
    b.d = d;
    b.label = "computational";
    b.vectors.resize(d, std::vector<Complex>(d, Complex{0.0, 0.0}));
    for (std::size_t i = 0; i < d; ++i) b.vectors[i][i] = 1.0;
    return b;
}

OrthonormalBasis basis_from_unitary_columns(const ComplexMatrix& u, std::string label) {
    if (u.rows() != u.cols()) throw ShapeError("basis_from_unitary_columns: not square");
    OrthonormalBasis b;
    b.d = u.rows();
    b.label = std::move(label);
    b.vectors.resize(b.d, std::vector<Complex>(b.d));
    for (std::size_t j = 0; j < b.d; ++j) {
        for (std::size_t i = 0; i < b.d; ++i) b.vectors[j][i] = u(i, j);
    }
    return b;
}

double verify_orthonormal(const OrthonormalBasis& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < b.vectors.size(); ++i) {
        for (std::size_t j = i; j < b.vectors.size(); ++j) {
            const Complex g = inner(b.vectors[i], b.vectors[j]);
            const double target = (i == j) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(g - target));
        }
    }
    return worst;
}

double verify_unbiased(const OrthonormalBasis& b1, const OrthonormalBasis& b2) {
    if (b1.d != b2.d) {
        throw ShapeError("verify_unbiased: dimensions differ (" + std::to_string(b1.d) +
                         " vs " + std::to_string(b2.d) + ")");
    }
    const double target = 1.0 / static_cast<double>(b1.d);
    double worst = 0.0;
    for (const auto& u : b1.vectors) {
        for (const auto& v : b2.vectors) {
            worst = std::max(worst, std::abs(std::norm(inner(u, v)) - target));
        }
    }
    return worst;
}

bool mub_construction_available(std::size_t d) {
    switch (d) {
        case 2: case 3: case 4: case 5: case 7: case 8: case 9: case 11: case 13:
            return true;
        default:
            return false;
    }
}

void certify_mub_set(MubSet& ms) {
    for (const auto& b : ms.bases) {
        if (b.d != ms.d) {
            throw IntegrityError("MubSet: basis '" + b.label + "' has dimension " +
                                 std::to_string(b.d) + ", set has " + std::to_string(ms.d));
        }
        const double dev = verify_orthonormal(b);
        if (dev > kOrthonormalityTol) {
            throw IntegrityError("MubSet: basis '" + b.label +
                                 "' fails orthonormality, deviation " + std::to_string(dev));
        }
    }
    for (std::size_t i = 0; i < ms.bases.size(); ++i) {
        for (std::size_t j = i + 1; j < ms.bases.size(); ++j) {
            const double dev = verify_unbiased(ms.bases[i], ms.bases[j]);
            if (dev > kUnbiasednessTol) {
                throw IntegrityError("MubSet: bases '" + ms.bases[i].label + "' and '" +
                                     ms.bases[j].label + "' fail unbiasedness, deviation " +
                                     std::to_string(dev));
            }
        }
    }
    ms.complete = (ms.bases.size() == ms.d + 1);
}

MubSet build_full_mub_set(std::size_t d) {
    if (!mub_construction_available(d)) {
        throw NoConstructionError("no construction available for d=" + std::to_string(d));
    }
    MubSet ms;
    ms.d = d;
    ms.bases.push_back(computational_basis(d));

    std::vector<OrthonormalBasis> constructed;
    if (d == 2) {
        constructed = pauli_bases_d2();
    } else if (d == 4) {
        constructed = bases_from_tables(detail::kMubTableD4);
    } else if (d == 8) {
        constructed = bases_from_tables(detail::kMubTableD8);
    } else {
        int p = 0, n = 0;
        decompose_prime_power(d, p, n);
        constructed = wootters_fields_bases(p, n);
    }
    for (auto& b : constructed) ms.bases.push_back(std::move(b));

    certify_mub_set(ms);
    if (!ms.complete) {
        throw IntegrityError("build_full_mub_set: expected " + std::to_string(d + 1) +
                             " bases, got " + std::to_string(ms.bases.size()));
    }
    return ms;
}

void save_bases(const MubSet& ms, const std::string& path) {
    nlohmann::json j;
    j["d"] = ms.d;
    nlohmann::json bases = nlohmann::json::array();
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& b : ms.bases) {
        nlohmann::json vecs = nlohmann::json::array();
        for (const auto& v : b.vectors) {
            nlohmann::json coords = nlohmann::json::array();
            for (const Complex& c : v) coords.push_back({c.real(), c.imag()});
            vecs.push_back(std::move(coords));
        }
        bases.push_back(std::move(vecs));
        labels.push_back(b.label);
    }
    j["bases"] = std::move(bases);
    j["labels"] = std::move(labels);

    std::ofstream out(path);
    if (!out) throw FormatError("save_bases: cannot open '" + path + "' for writing");
    out << j.dump(2) << '\n';
}

MubSet load_bases(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("load_bases: cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("load_bases: '" + path + "' is not valid JSON: " + e.what());
    }

    MubSet ms;
    try {
        ms.d = j.at("d").get<std::size_t>();
        const auto& bases = j.at("bases");
        const auto& labels = j.at("labels");
        if (!bases.is_array() || !labels.is_array() || bases.size() != labels.size()) {
            throw FormatError("load_bases: 'bases' and 'labels' must be arrays of equal length");
        }
        for (std::size_t k = 0; k < bases.size(); ++k) {
            OrthonormalBasis b;
            b.d = ms.d;
            b.label = labels[k].get<std::string>();
            const auto& vecs = bases[k];
            if (vecs.size() != ms.d) {
                throw FormatError("load_bases: basis " + std::to_string(k) + " has " +
                                  std::to_string(vecs.size()) + " vectors, expected d=" +
                                  std::to_string(ms.d));
            }
            for (const auto& vec : vecs) {
                if (vec.size() != ms.d) {
                    throw FormatError("load_bases: vector in basis " + std::to_string(k) +
                                      " has " + std::to_string(vec.size()) +
                                      " coordinates, expected d=" + std::to_string(ms.d));
                }
                std::vector<Complex> v;
                v.reserve(ms.d);
                for (const auto& c : vec) {
                    if (!c.is_array() || c.size() != 2) {
                        throw FormatError("load_bases: complex entries must be [re, im] pairs");
                    }
                    v.emplace_back(c[0].get<double>(), c[1].get<double>());
                }
                b.vectors.push_back(std::move(v));
            }
            ms.bases.push_back(std::move(b));
        }
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("load_bases: schema error in '" + path + "': " + e.what());
    }

    certify_mub_set(ms);
    return ms;
}

}  // namespace mubkit
