#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mubkit/entropy.hpp"
#include "mubkit/mub.hpp"
#include "mubkit/states.hpp"

namespace mubkit {

enum class CheckKind { T1Equality, T1Inequality, T2Conservation, Eq1 };

const char* check_name(CheckKind k);

/// Outcome of a single theorem check on a single state.
struct TheoremResult {
    CheckKind kind = CheckKind::T1Equality;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual_or_slack = 0.0;  // lhs - rhs exactly as computed
    bool pass = false;
    double tol = 0.0;
    std::size_t d = 0;
    std::size_t m = 0;  // number of bases involved
    std::uint64_t seed = 0;
    std::vector<std::string> basis_labels;
};

/// Default tolerance for the uncertainty-equality residual; the sums carry
/// terms of magnitude d^3, so the tolerance scales with them.
inline double default_t1_tol(std::size_t d) {
    const double dd = static_cast<double>(d);
    return 1e-8 * dd * dd * dd;
}
inline constexpr double kT2Tol = 1e-10;
inline constexpr double kIneqTol = 1e-10;
inline constexpr double kEq1Tol = 1e-8;

/// Uncertainty equality over a complete MUB set:
/// sum_theta S_L(theta|B) = S_L(A|B) + d^3 - d^2.
/// Requires ms.complete; tol defaults to 1e-8 * d^3. use_dense selects the
/// assembled-state route instead of the measurement-block fast path.
TheoremResult check_t1_equality(const BipartiteState& s, const MubSet& ms,
                                std::optional<double> tol = std::nullopt,
                                bool use_dense = false);

/// Uncertainty inequality for any M >= 2 pairwise-unbiased bases:
/// sum_theta S_L(theta|B) >= (dM - d^2) tr rho_B^2 - d(M-1) tr rho_AB^2 + M(d^2 - d).
TheoremResult check_t1_inequality(const BipartiteState& s,
                                  const std::vector<OrthonormalBasis>& bases,
                                  std::optional<double> tol = std::nullopt,
                                  bool use_dense = false);

/// Correlation conservation over a complete MUB set:
/// sum_theta I_L(rho_thetaB) = I_L(rho_AB).
TheoremResult check_t2_conservation(const BipartiteState& s, const MubSet& ms,
                                    std::optional<double> tol = std::nullopt,
                                    bool use_dense = false);

/// Von Neumann cross-check wrapped as a TheoremResult (slack semantics).
TheoremResult check_eq1(const BipartiteState& s, const OrthonormalBasis& theta,
                        const OrthonormalBasis& tau,
                        std::optional<double> tol = std::nullopt);

// ---------------------------------------------------------------- sweeps --

struct SweepConfig {
    std::vector<std::size_t> dims;
    std::size_t trials = 1000;
    std::vector<std::string> ranks = {"1", "half", "full"};  // tokens: int | half | full
    std::uint64_t seed = 0;
    std::vector<CheckKind> checks = {CheckKind::T1Equality, CheckKind::T2Conservation};
    std::optional<double> tol_t1, tol_t2, tol_ineq, tol_eq1;
    std::size_t jobs = 1;
    bool verify_dense = false;   // recompute via the dense route and compare
    bool collect_trials = false; // retain per-trial rows (CSV export)
};

/// Resolve a rank token against local dimension d (matrix side d^2).
std::size_t resolve_rank(const std::string& token, std::size_t d);

struct CheckAggregate {
    std::size_t trials = 0;
    double max_abs_residual = 0.0;  // equalities
    double min_slack = 0.0;         // inequalities
    double mean = 0.0;              // mean |residual| or mean slack
    std::uint64_t worst_seed = 0;
    double tol = 0.0;
    bool pass = true;
    std::size_t violations = 0;
    bool is_inequality = false;
};

struct TrialRecord {
    std::size_t d = 0;
    std::string rank;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::string check;
    double value = 0.0;  // residual (equalities) or slack (inequalities)
};

struct DimReport {
    std::size_t d = 0;
    std::map<std::string, CheckAggregate> checks;
    std::string error;  // set when the dimension could not run (e.g. d=6)
    std::size_t slb_negative_count = 0;  // S_L(theta|B) < -1e-10 sightings
    double seconds = 0.0;  // wall time; not serialized (reports stay bitwise)
};

struct SweepReport {
    SweepConfig config;
    std::vector<DimReport> per_dim;
    bool pass = false;
    std::size_t failures = 0;  // failed checks plus errored dimensions
    std::vector<TrialRecord> trial_rows;
};

/// Seeded ensemble sweep over the configured grid. Deterministic given the
/// base seed: per-trial streams are derived, never shared, so the report is
/// independent of the worker count. Unsupported dimensions are reported as
/// errors without aborting the remaining grid.
SweepReport run_sweep(const SweepConfig& config);

std::string report_to_json(const SweepReport& report);
void save_report(const SweepReport& report, const std::string& path);
void save_trials_csv(const SweepReport& report, const std::string& path);

}  // namespace mubkit
