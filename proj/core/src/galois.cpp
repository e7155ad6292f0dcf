#include "mubkit/galois.hpp"

#include <string>

#include "mubkit/errors.hpp"

namespace mubkit {

namespace {

bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int f = 3; f * f <= p; f += 2) {
        if (p % f == 0) return false;
    }
    return true;
}

// polynomial coefficient vectors over GF(p), low-to-high, no implied leading 1
std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    std::vector<int> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
        }
    }
    return out;
}

// remainder of poly / div, div monic given as full coefficient vector
std::vector<int> poly_mod(std::vector<int> poly, const std::vector<int>& div, int p) {
    const std::size_t ddeg = div.size() - 1;
    while (poly.size() > ddeg) {
        const int lead = poly.back();
        if (lead != 0) {
            const std::size_t shift = poly.size() - 1 - ddeg;
            for (std::size_t i = 0; i <= ddeg; ++i) {
                poly[shift + i] = ((poly[shift + i] - lead * div[i]) % p + p) % p;
            }
        }
        poly.pop_back();
    }
    poly.resize(ddeg, 0);
    return poly;
}

bool poly_is_zero(const std::vector<int>& a) {
    for (int c : a) {
        if (c != 0) return false;
    }
    return true;
}

// trial division against all monic polynomials of degree <= n/2
bool is_irreducible(const std::vector<int>& non_leading, int p, int n) {
    std::vector<int> full = non_leading;
    full.push_back(1);
    for (int deg = 1; deg <= n / 2; ++deg) {
        int count = 1;
        for (int i = 0; i < deg; ++i) count *= p;
        for (int idx = 0; idx < count; ++idx) {
            std::vector<int> div(deg + 1, 0);
            int m = idx;
            for (int i = 0; i < deg; ++i) {
                div[i] = m % p;
                m /= p;
            }
            div[deg] = 1;
            if (poly_is_zero(poly_mod(full, div, p))) return false;
        }
    }
    return true;
}

}  // namespace

GaloisField::GaloisField(int p, int n) : p_(p), n_(n) {
    if (!is_odd_prime(p)) {
        throw DomainError("GaloisField: p = " + std::to_string(p) + " is not an odd prime");
    }
    if (n < 1) {
        throw DomainError("GaloisField: extension degree must be >= 1");
    }
    long long q = 1;
    for (int i = 0; i < n; ++i) q *= p;
    if (q > 81) {
        throw DomainError("GaloisField: field order " + std::to_string(q) +
                          " exceeds the supported cap 81");
    }
    q_ = static_cast<int>(q);

    // deterministic scan: candidate index N encodes non-leading coefficients
    // as base-p digits, constant term least significant
    for (int N = 0; N < q_; ++N) {
        std::vector<int> c(n, 0);
        int m = N;
        for (int i = 0; i < n; ++i) {
            c[i] = m % p;
            m /= p;
        }
        if (is_irreducible(c, p, n)) {
            modulus_ = c;
            return;
        }
    }
    throw DomainError("GaloisField: no irreducible modulus found");  // unreachable
}

FieldElement GaloisField::zero() const { return {std::vector<int>(n_, 0), p_, n_}; }

FieldElement GaloisField::one() const {
    FieldElement e = zero();
    e.coeffs[0] = 1;
    return e;
}

FieldElement GaloisField::element(int index) const {
    if (index < 0 || index >= q_) {
        throw DomainError("GaloisField: element index " + std::to_string(index) +
                          " outside [0, " + std::to_string(q_) + ")");
    }
    FieldElement e = zero();
    for (int i = 0; i < n_; ++i) {
        e.coeffs[i] = index % p_;
        index /= p_;
    }
    return e;
}

int GaloisField::index_of(const FieldElement& a) const {
    require_same_field(a);
    int idx = 0;
    for (int i = n_ - 1; i >= 0; --i) idx = idx * p_ + a.coeffs[i];
    return idx;
}

void GaloisField::require_same_field(const FieldElement& a) const {
    if (a.p != p_ || a.n != n_ || a.coeffs.size() != static_cast<std::size_t>(n_)) {
        throw DomainError("FieldElement belongs to GF(" + std::to_string(a.p) + "^" +
                          std::to_string(a.n) + "), expected GF(" + std::to_string(p_) +
                          "^" + std::to_string(n_) + ")");
    }
}

FieldElement GaloisField::add(const FieldElement& a, const FieldElement& b) const {
    require_same_field(a);
    require_same_field(b);
    FieldElement out = zero();
    for (int i = 0; i < n_; ++i) out.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % p_;
    return out;
}

FieldElement GaloisField::mul(const FieldElement& a, const FieldElement& b) const {
    require_same_field(a);
    require_same_field(b);
    std::vector<int> full = modulus_;
    full.push_back(1);
    std::vector<int> prod = poly_mod(poly_mul(a.coeffs, b.coeffs, p_), full, p_);
    return {std::move(prod), p_, n_};
}

FieldElement GaloisField::pow_uint(const FieldElement& a, std::uint64_t e) const {
    FieldElement result = one();
    FieldElement base = a;
    while (e > 0) {
        if (e & 1ull) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

int GaloisField::trace(const FieldElement& a) const {
    require_same_field(a);
    FieldElement acc = zero();
    FieldElement x = a;  // iterated Frobenius: x -> x^p
    for (int k = 0; k < n_; ++k) {
        acc = add(acc, x);
        x = pow_uint(x, static_cast<std::uint64_t>(p_));
    }
    // the trace lies in the prime subfield
    for (int i = 1; i < n_; ++i) {
        if (acc.coeffs[i] != 0) {
            throw DomainError("GaloisField::trace: result escaped the prime subfield");
        }
    }
    return acc.coeffs[0];
}

std::vector<FieldElement> GaloisField::enumerate() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (int i = 0; i < q_; ++i) out.push_back(element(i));
    return out;
}

}  // namespace mubkit
