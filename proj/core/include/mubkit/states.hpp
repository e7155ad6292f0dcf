#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mubkit/linalg.hpp"
#include "mubkit/rng.hpp"

namespace mubkit {

/// Trace-1 Hermitian PSD operator on a d-dimensional space.
struct DensityMatrix {
    std::size_t d = 0;
    ComplexMatrix mat;  // d x d
};

/// Trace-1 Hermitian PSD operator on a d (x) d composite space, flat side d^2
/// with the i_A * d + i_B index convention from linalg.
struct BipartiteState {
    std::size_t d = 0;  // local dimension
    ComplexMatrix mat;  // d^2 x d^2
};

// density-operator invariant tolerances
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;

/// Names of violated density-operator invariants, with measured deviations;
/// empty when the matrix is a valid state. Checks Hermiticity, unit trace,
/// finiteness, and (via the Jacobi eigensolver) positive semidefiniteness.
std::vector<std::string> density_invariant_violations(const ComplexMatrix& mat);

/// Pure state |psi><psi| from a normalized vector of standard complex
/// Gaussians; purity 1 within roundoff.
DensityMatrix random_pure(std::size_t d, RandomStream& rng);

/// Ginibre-induced density matrix rho = G G^dag / tr(G G^dag), G d x rank.
/// Throws DomainError unless 1 <= rank <= d.
DensityMatrix random_density(std::size_t d, std::size_t rank, RandomStream& rng);

/// Ginibre-induced bipartite state at side d^2; 1 <= rank <= d^2.
BipartiteState random_bipartite(std::size_t d, std::size_t rank, RandomStream& rng);

/// |Phi><Phi| with |Phi> = (1/sqrt d) sum_i |ii>.
BipartiteState maximally_entangled(std::size_t d);

/// kron(a, b). Throws ShapeError when dimensions differ.
BipartiteState product_state(const DensityMatrix& a, const DensityMatrix& b);

/// (1/d) sum_i |ii><ii| -- perfectly classically correlated fixture.
BipartiteState classical_correlated(std::size_t d);

/// (rho_A, rho_B) via partial traces.
std::pair<DensityMatrix, DensityMatrix> marginals(const BipartiteState& s);

/// JSON state files: {"d": int, "bipartite": bool, "rho": [[[re,im],...],...]}.
/// Loaders enforce the density invariants and report which failed.
void save_state(const DensityMatrix& rho, const std::string& path);
void save_state(const BipartiteState& s, const std::string& path);

struct LoadedState {
    bool bipartite = false;
    DensityMatrix single;   // valid when !bipartite
    BipartiteState joint;   // valid when bipartite
};
LoadedState load_state(const std::string& path);

}  // namespace mubkit
