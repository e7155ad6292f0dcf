#pragma once

#include <cstdint>
#include <vector>

namespace mubkit {

/// Element of GF(p^n): n residues mod p, low-degree coefficient first,
/// tagged with the parent field's (p, n) for mismatch detection.
struct FieldElement {
    std::vector<int> coeffs;
    int p = 0;
    int n = 0;

    bool operator==(const FieldElement&) const = default;
};

/// Finite field GF(p^n) for odd prime p, backing the quadratic-phase MUB
/// construction. The modulus is the deterministic first monic irreducible
/// of degree n in the base-p coefficient scan (constant digit least
/// significant), so outputs are reproducible bit for bit.
class GaloisField {
public:
    /// Builds GF(p^n). Throws DomainError unless p is an odd prime, n >= 1
    /// and p^n <= 81.
    GaloisField(int p, int n);

    int p() const { return p_; }
    int n() const { return n_; }
    int q() const { return q_; }

    /// Non-leading coefficients of the monic modulus, low-to-high (length n).
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;

    /// Element with coefficient digits of index in base p (index in [0, q)).
    FieldElement element(int index) const;
    int index_of(const FieldElement& a) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;

    /// Field trace tr(a) = a + a^p + ... + a^{p^(n-1)}, as a residue in [0, p).
    int trace(const FieldElement& a) const;

    /// All q elements in index order (coefficient-lexicographic, low
    /// coefficient fastest, zero first).
    std::vector<FieldElement> enumerate() const;

private:
    void require_same_field(const FieldElement& a) const;
    FieldElement pow_uint(const FieldElement& a, std::uint64_t e) const;

    int p_;
    int n_;
    int q_;
    std::vector<int> modulus_;
};

}  // namespace mubkit
