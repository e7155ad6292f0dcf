#pragma once

#include <cstddef>
#include <vector>

#include "mubkit/linalg.hpp"
#include "mubkit/mub.hpp"
#include "mubkit/states.hpp"

namespace mubkit {

enum class EntropyKind {
    Linear,
    LinearConditional,
    LinearMutualInfo,
    VonNeumann,
    VnConditional,
};

struct EntropyValue {
    double value = 0.0;
    EntropyKind kind = EntropyKind::Linear;
};

/// Linear entropy S_L(rho) = side * (1 - tr rho^2), side the matrix side
/// (d^2 for bipartite states). 0 for pure states, side-1 for maximally mixed;
/// sub-roundoff negatives are clamped to keep the contract range [0, side-1].
EntropyValue linear_entropy(const DensityMatrix& rho);
EntropyValue linear_entropy(const BipartiteState& s);

/// Projective measurement of subsystem A: sum_i |i><i| (x) <i|rho|i>.
/// Preserves trace and the B marginal; idempotent per basis.
BipartiteState measure_A(const BipartiteState& s, const OrthonormalBasis& basis);

/// The d measurement blocks B_i = <i_theta| rho_AB |i_theta> (each d x d on
/// the B factor). The fast carrier for post-measurement functionals:
/// tr(rho_thetaB^2) = sum_i tr(B_i^2), marginals and spectra follow from the
/// blocks without assembling the d^2 x d^2 matrix.
std::vector<ComplexMatrix> measurement_blocks(const BipartiteState& s,
                                              const OrthonormalBasis& basis);

/// Conditional linear entropy of a post-measurement state:
/// S_L(theta|B) = d tr(rho_B^2) - d^2 tr(rho_thetaB^2) + (d^2 - d).
/// rhoB must be the B marginal of s_post (checked within 1e-10); the
/// definitional route S_L(rho_thetaB) - S_L(rho_B) is evaluated as a
/// self-check within 1e-10.
EntropyValue cond_linear_entropy_post(const BipartiteState& s_post, const DensityMatrix& rhoB);

/// S_L(A|B) = S_L(rho_AB) - S_L(rho_B); may be negative for entangled states.
EntropyValue cond_linear_entropy_AB(const BipartiteState& s);

/// Total correlation I_L = tr((rho_AB - rho_A (x) rho_B)^2).
EntropyValue linear_mutual_information(const BipartiteState& s);

/// Von Neumann entropy -sum lambda log2 lambda over eigenvalues > 1e-12.
EntropyValue von_neumann_entropy(const DensityMatrix& rho);
EntropyValue von_neumann_entropy(const BipartiteState& s);

/// S(sigma) - S(sigma_B) for a (possibly post-measurement) bipartite state.
EntropyValue cond_vn(const BipartiteState& s);

/// Slack of S(theta|B) + S(tau|B) >= log2 d + S(A|B) for two unbiased bases
/// (LHS - RHS; the relation claims slack >= 0). Throws DomainError when the
/// bases are not unbiased within 1e-10.
double check_eq1_von_neumann(const BipartiteState& s, const OrthonormalBasis& theta,
                             const OrthonormalBasis& tau);

// --- block-level helpers shared by the sweep fast path ---

/// tr(rho_thetaB^2) from measurement blocks: sum_i tr(B_i^2).
double purity_from_blocks(const std::vector<ComplexMatrix>& blocks);

/// I_L(rho_thetaB) from blocks and the (preserved) B marginal:
/// sum_i tr B_i^2 - 2 sum_i p_i tr(B_i rho_B) + (sum_i p_i^2) tr(rho_B^2),
/// p_i = tr B_i.
double mutual_info_from_blocks(const std::vector<ComplexMatrix>& blocks,
                               const ComplexMatrix& rhoB);

/// Von Neumann entropy of the post-measurement state from its blocks (the
/// spectrum of the block-diagonal state is the union of block spectra).
double vn_entropy_from_blocks(const std::vector<ComplexMatrix>& blocks);

}  // namespace mubkit
