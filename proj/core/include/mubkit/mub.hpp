#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mubkit/linalg.hpp"

namespace mubkit {

/// Measurement basis: d unit vectors of d complex components.
struct OrthonormalBasis {
    std::size_t d = 0;
    std::vector<std::vector<Complex>> vectors;  // [vector][coordinate]
    std::string label;
};

/// Ordered collection of pairwise unbiased bases; complete == (size == d+1).
struct MubSet {
    std::size_t d = 0;
    std::vector<OrthonormalBasis> bases;
    bool complete = false;
};

// certification tolerances (see MubSet invariants)
inline constexpr double kOrthonormalityTol = 1e-12;
inline constexpr double kUnbiasednessTol = 1e-10;

/// Standard basis e_1..e_d. Throws DomainError for d < 2.
OrthonormalBasis computational_basis(std::size_t d);

/// Basis from the columns of a (presumed unitary) matrix.
OrthonormalBasis basis_from_unitary_columns(const ComplexMatrix& u, std::string label);

/// Max over (i,j) of |<v_i|v_j> - delta_ij|.
double verify_orthonormal(const OrthonormalBasis& b);

/// Max over (i,j) of ||<i|j>|^2 - 1/d|; caller compares against tolerance.
/// Throws ShapeError on dimension mismatch.
double verify_unbiased(const OrthonormalBasis& b1, const OrthonormalBasis& b2);

/// Complete set of d+1 mutually unbiased bases, certified at construction.
/// Computational basis first; quadratic Gauss-phase bases for odd prime
/// powers, Pauli eigenbases for d=2, Galois-ring phase tables for d=4, 8.
/// Throws NoConstructionError for unsupported d (6, 10, 12, ..., and d < 2).
MubSet build_full_mub_set(std::size_t d);

/// True when build_full_mub_set supports d.
bool mub_construction_available(std::size_t d);

/// Throws IntegrityError unless every basis is orthonormal within 1e-12 and
/// every pair unbiased within 1e-10; sets ms.complete.
void certify_mub_set(MubSet& ms);

/// JSON round trip; load re-certifies all invariants.
void save_bases(const MubSet& ms, const std::string& path);
MubSet load_bases(const std::string& path);

namespace detail {
// Galois-ring phase exponent tables: vector b, coordinate x -> e with
// component i^e / sqrt(d). Certified against the MubSet invariants at build.
extern const unsigned char kMubTableD4[4][4][4];
extern const unsigned char kMubTableD8[8][8][8];
}  // namespace detail

}  // namespace mubkit
