#include "mubkit/theorems.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <thread>

#include <json.hpp>

#include "mubkit/errors.hpp"

namespace mubkit {

namespace {

double trace_sq(const ComplexMatrix& m) { return hs_norm_sq(m); }

// S_L(theta|B) from tr(rho_B^2) and tr(rho_thetaB^2)
double slb_from_purities(std::size_t d, double trB2, double trSigma2) {
    const double dd = static_cast<double>(d);
    return dd * trB2 - dd * dd * trSigma2 + (dd * dd - dd);
}

// Eq-6 style right-hand side for M pairwise-unbiased bases
double ineq_rhs(std::size_t d, std::size_t m, double trB2, double trAB2) {
    const double dd = static_cast<double>(d);
    const double mm = static_cast<double>(m);
    return (dd * mm - dd * dd) * trB2 - dd * (mm - 1.0) * trAB2 + mm * (dd * dd - dd);
}

void require_matching(const BipartiteState& s, const MubSet& ms, const char* who) {
    if (ms.d != s.d) {
        throw ShapeError(std::string(who) + ": MubSet dimension " + std::to_string(ms.d) +
                         " does not match state dimension " + std::to_string(s.d));
    }
    if (!ms.complete) {
        throw DomainError(std::string(who) + ": equality requires a full set of d+1 MUBs (got " +
                          std::to_string(ms.bases.size()) + " for d=" + std::to_string(ms.d) + ")");
    }
}

std::vector<std::string> labels_of(const MubSet& ms) {
    std::vector<std::string> out;
    out.reserve(ms.bases.size());
    for (const auto& b : ms.bases) out.push_back(b.label);
    return out;
}

}  // namespace

const char* check_name(CheckKind k) {
    switch (k) {
        case CheckKind::T1Equality: return "t1";
        case CheckKind::T1Inequality: return "t1-ineq";
        case CheckKind::T2Conservation: return "t2";
        case CheckKind::Eq1: return "eq1";
    }
    return "?";
}

TheoremResult check_t1_equality(const BipartiteState& s, const MubSet& ms,
                                std::optional<double> tol, bool use_dense) {
    require_matching(s, ms, "check_t1_equality");
    const std::size_t d = s.d;
    const ComplexMatrix rhoB = partial_trace(s.mat, d, d, Subsystem::B);
    const double trB2 = trace_sq(rhoB);

    double lhs = 0.0;
    if (use_dense) {
        const DensityMatrix rb{d, rhoB};
        for (const auto& basis : ms.bases) {
            lhs += cond_linear_entropy_post(measure_A(s, basis), rb).value;
        }
    } else {
        for (const auto& basis : ms.bases) {
            const auto blocks = measurement_blocks(s, basis);
            lhs += slb_from_purities(d, trB2, purity_from_blocks(blocks));
        }
    }
    const double dd = static_cast<double>(d);
    const double rhs = cond_linear_entropy_AB(s).value + (dd * dd * dd - dd * dd);

    TheoremResult r;
    r.kind = CheckKind::T1Equality;
    r.lhs = lhs;
    r.rhs = rhs;
    r.residual_or_slack = lhs - rhs;
    r.tol = tol.value_or(default_t1_tol(d));
    r.pass = std::abs(r.residual_or_slack) <= r.tol;
    r.d = d;
    r.m = ms.bases.size();
    r.basis_labels = labels_of(ms);
    return r;
}

TheoremResult check_t1_inequality(const BipartiteState& s,
                                  const std::vector<OrthonormalBasis>& bases,
                                  std::optional<double> tol, bool use_dense) {
    const std::size_t d = s.d;
    const std::size_t m = bases.size();
    if (m < 2 || m > d + 1) {
        throw DomainError("check_t1_inequality: need between 2 and d+1 bases, got " +
                          std::to_string(m));
    }
    for (const auto& b : bases) {
        if (b.d != d) {
            throw ShapeError("check_t1_inequality: basis '" + b.label +
                             "' has dimension " + std::to_string(b.d));
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const double dev = verify_unbiased(bases[i], bases[j]);
            if (dev > kUnbiasednessTol) {
                throw DomainError("check_t1_inequality: bases '" + bases[i].label +
                                  "' and '" + bases[j].label +
                                  "' are not unbiased (deviation " + std::to_string(dev) + ")");
            }
        }
    }

    const ComplexMatrix rhoB = partial_trace(s.mat, d, d, Subsystem::B);
    const double trB2 = trace_sq(rhoB);

    double lhs = 0.0;
    if (use_dense) {
        const DensityMatrix rb{d, rhoB};
        for (const auto& basis : bases) {
            lhs += cond_linear_entropy_post(measure_A(s, basis), rb).value;
        }
    } else {
        for (const auto& basis : bases) {
            lhs += slb_from_purities(d, trB2, purity_from_blocks(measurement_blocks(s, basis)));
        }
    }
    const double rhs = ineq_rhs(d, m, trB2, trace_sq(s.mat));

    TheoremResult r;
    r.kind = CheckKind::T1Inequality;
    r.lhs = lhs;
    r.rhs = rhs;
    r.residual_or_slack = lhs - rhs;
    r.tol = tol.value_or(kIneqTol);
    r.pass = r.residual_or_slack >= -r.tol;
    r.d = d;
    r.m = m;
    for (const auto& b : bases) r.basis_labels.push_back(b.label);
    return r;
}

TheoremResult check_t2_conservation(const BipartiteState& s, const MubSet& ms,
                                    std::optional<double> tol, bool use_dense) {
    require_matching(s, ms, "check_t2_conservation");
    const std::size_t d = s.d;
    const ComplexMatrix rhoB = partial_trace(s.mat, d, d, Subsystem::B);

    double lhs = 0.0;
    if (use_dense) {
        for (const auto& basis : ms.bases) {
            lhs += linear_mutual_information(measure_A(s, basis)).value;
        }
    } else {
        for (const auto& basis : ms.bases) {
            lhs += mutual_info_from_blocks(measurement_blocks(s, basis), rhoB);
        }
    }
    const double rhs = linear_mutual_information(s).value;

    TheoremResult r;
    r.kind = CheckKind::T2Conservation;
    r.lhs = lhs;
    r.rhs = rhs;
    r.residual_or_slack = lhs - rhs;
    r.tol = tol.value_or(kT2Tol);
    r.pass = std::abs(r.residual_or_slack) <= r.tol;
    r.d = d;
    r.m = ms.bases.size();
    r.basis_labels = labels_of(ms);
    return r;
}

TheoremResult check_eq1(const BipartiteState& s, const OrthonormalBasis& theta,
                        const OrthonormalBasis& tau, std::optional<double> tol) {
    const double slack = check_eq1_von_neumann(s, theta, tau);
    TheoremResult r;
    r.kind = CheckKind::Eq1;
    r.rhs = 0.0;
    r.lhs = slack;
    r.residual_or_slack = slack;
    r.tol = tol.value_or(kEq1Tol);
    r.pass = slack >= -r.tol;
    r.d = s.d;
    r.m = 2;
    r.basis_labels = {theta.label, tau.label};
    return r;
}

std::size_t resolve_rank(const std::string& token, std::size_t d) {
    const std::size_t side = d * d;
    if (token == "full") return side;
    if (token == "half") return (side + 1) / 2;
    std::size_t value = 0;
    try {
        value = static_cast<std::size_t>(std::stoul(token));
    } catch (const std::exception&) {
        throw DomainError("resolve_rank: bad rank token '" + token + "'");
    }
    if (value < 1 || value > side) {
        throw DomainError("resolve_rank: rank " + token + " outside [1, " +
                          std::to_string(side) + "] for d=" + std::to_string(d));
    }
    return value;
}

namespace {

struct TrialValues {
    // one slot per requested check; quiet NaN marks "not run"
    double t1 = std::numeric_limits<double>::quiet_NaN();
    double t2 = std::numeric_limits<double>::quiet_NaN();
    double ineq = std::numeric_limits<double>::quiet_NaN();
    double eq1 = std::numeric_limits<double>::quiet_NaN();
    double dense_gap = std::numeric_limits<double>::quiet_NaN();
    std::uint64_t seed = 0;
    std::size_t slb_negatives = 0;
};

bool has_check(const SweepConfig& cfg, CheckKind k) {
    return std::find(cfg.checks.begin(), cfg.checks.end(), k) != cfg.checks.end();
}

// everything fixed per dimension that trials share read-only
struct DimContext {
    std::size_t d = 0;
    MubSet mub;
    double log2d = 0.0;
};

TrialValues run_trial(const SweepConfig& cfg, const DimContext& ctx, std::uint64_t seed,
                      std::size_t rank) {
    TrialValues out;
    out.seed = seed;
    RandomStream rng(seed);
    const BipartiteState s = random_bipartite(ctx.d, rank, rng);
    const std::size_t d = ctx.d;
    const double dd = static_cast<double>(d);
    const std::size_t nbases = ctx.mub.bases.size();

    const ComplexMatrix rhoB = partial_trace(s.mat, d, d, Subsystem::B);
    const double trB2 = trace_sq(rhoB);
    const double trAB2 = trace_sq(s.mat);

    const bool want_t1 = has_check(cfg, CheckKind::T1Equality);
    const bool want_t2 = has_check(cfg, CheckKind::T2Conservation);
    const bool want_ineq = has_check(cfg, CheckKind::T1Inequality);
    const bool want_eq1 = has_check(cfg, CheckKind::Eq1);

    std::vector<double> slb(nbases, 0.0);
    double t2_lhs = 0.0;
    std::vector<double> vn_theta(nbases, 0.0);
    for (std::size_t t = 0; t < nbases; ++t) {
        const auto blocks = measurement_blocks(s, ctx.mub.bases[t]);
        slb[t] = slb_from_purities(d, trB2, purity_from_blocks(blocks));
        if (slb[t] < -1e-10) ++out.slb_negatives;
        if (want_t2) t2_lhs += mutual_info_from_blocks(blocks, rhoB);
        if (want_eq1) vn_theta[t] = vn_entropy_from_blocks(blocks);
    }

    if (want_t1) {
        const double lhs = std::accumulate(slb.begin(), slb.end(), 0.0);
        const double rhs = slb_from_purities(d, trB2, trAB2) + (dd * dd * dd - dd * dd);
        out.t1 = lhs - rhs;
    }
    if (want_t2) {
        const auto [rhoA_dm, rhoB_dm] = marginals(s);
        const double rhs = hs_norm_sq(sub(s.mat, kron(rhoA_dm.mat, rhoB_dm.mat)));
        out.t2 = t2_lhs - rhs;
    }
    if (want_ineq) {
        // all subsets of size 2..d+1; lhs terms are precomputed per basis
        double worst = std::numeric_limits<double>::infinity();
        const std::size_t full = (std::size_t{1} << nbases);
        for (std::size_t mask = 0; mask < full; ++mask) {
            const int m = std::popcount(mask);
            if (m < 2) continue;
            double lhs = 0.0;
            for (std::size_t t = 0; t < nbases; ++t) {
                if (mask & (std::size_t{1} << t)) lhs += slb[t];
            }
            worst = std::min(worst, lhs - ineq_rhs(d, static_cast<std::size_t>(m), trB2, trAB2));
        }
        out.ineq = worst;
    }
    if (want_eq1) {
        const double s_ab = von_neumann_entropy(s).value;
        const double s_b = von_neumann_entropy(DensityMatrix{d, rhoB}).value;
        double worst = std::numeric_limits<double>::infinity();
        for (std::size_t t = 0; t < nbases; ++t) {
            for (std::size_t u = t + 1; u < nbases; ++u) {
                const double lhs = (vn_theta[t] - s_b) + (vn_theta[u] - s_b);
                const double rhs = ctx.log2d + (s_ab - s_b);
                worst = std::min(worst, lhs - rhs);
            }
        }
        out.eq1 = worst;
    }
    if (cfg.verify_dense && (want_t1 || want_t2)) {
        double gap = 0.0;
        if (want_t1) {
            const auto dense = check_t1_equality(s, ctx.mub, std::nullopt, true);
            const double fast_lhs = std::accumulate(slb.begin(), slb.end(), 0.0);
            gap = std::max(gap, std::abs(dense.lhs - fast_lhs));
        }
        if (want_t2) {
            const auto dense = check_t2_conservation(s, ctx.mub, std::nullopt, true);
            gap = std::max(gap, std::abs(dense.lhs - t2_lhs));
        }
        out.dense_gap = gap;
    }
    return out;
}

}  // namespace

SweepReport run_sweep(const SweepConfig& config) {
    if (config.dims.empty()) throw DomainError("run_sweep: dims must be nonempty");
    if (config.trials < 1) throw DomainError("run_sweep: trials must be >= 1");
    if (config.ranks.empty()) throw DomainError("run_sweep: ranks must be nonempty");

    SweepReport report;
    report.config = config;
    report.pass = true;

    for (std::size_t dim_index = 0; dim_index < config.dims.size(); ++dim_index) {
        const std::size_t d = config.dims[dim_index];
        DimReport dim;
        dim.d = d;
        const auto t_start = std::chrono::steady_clock::now();

        DimContext ctx;
        try {
            ctx.d = d;
            ctx.mub = build_full_mub_set(d);
            ctx.log2d = std::log2(static_cast<double>(d));
            for (const auto& token : config.ranks) {
                resolve_rank(token, d);  // validate the grid up front
            }
        } catch (const std::exception& e) {
            dim.error = e.what();
            report.per_dim.push_back(std::move(dim));
            report.failures += 1;
            report.pass = false;
            continue;
        }

        // per-trial results, one slot per (rank, trial); filled by workers
        const std::size_t per_rank = config.trials;
        std::vector<TrialValues> values(config.ranks.size() * per_rank);

        for (std::size_t r = 0; r < config.ranks.size(); ++r) {
            const std::size_t rank = resolve_rank(config.ranks[r], d);
            const std::size_t jobs = std::max<std::size_t>(1, config.jobs);
            auto worker = [&](std::size_t w) {
                for (std::size_t t = w; t < per_rank; t += jobs) {
                    const std::uint64_t seed = derive_seed(config.seed, d, r, t);
                    values[r * per_rank + t] = run_trial(config, ctx, seed, rank);
                }
            };
            if (jobs == 1) {
                worker(0);
            } else {
                std::vector<std::thread> pool;
                pool.reserve(jobs);
                for (std::size_t w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
                for (auto& th : pool) th.join();
            }
        }

        // serial aggregation in fixed order keeps reports bitwise reproducible
        auto aggregate = [&](const char* name, bool inequality, double tol,
                             auto value_of) {
            CheckAggregate agg;
            agg.is_inequality = inequality;
            agg.tol = tol;
            agg.min_slack = std::numeric_limits<double>::infinity();
            double sum = 0.0;
            for (std::size_t idx = 0; idx < values.size(); ++idx) {
                const double v = value_of(values[idx]);
                if (std::isnan(v)) continue;
                agg.trials += 1;
                sum += inequality ? v : std::abs(v);
                if (inequality) {
                    if (v < agg.min_slack) {
                        agg.min_slack = v;
                        agg.worst_seed = values[idx].seed;
                    }
                    if (v < -tol) ++agg.violations;
                } else {
                    if (std::abs(v) > agg.max_abs_residual) {
                        agg.max_abs_residual = std::abs(v);
                        agg.worst_seed = values[idx].seed;
                    }
                    if (std::abs(v) > tol) ++agg.violations;
                }
            }
            if (agg.trials > 0) {
                agg.mean = sum / static_cast<double>(agg.trials);
                agg.pass = (agg.violations == 0);
                dim.checks[name] = agg;
                if (!agg.pass) {
                    report.failures += 1;
                    report.pass = false;
                }
            }
        };

        if (has_check(config, CheckKind::T1Equality)) {
            aggregate("t1", false, config.tol_t1.value_or(default_t1_tol(d)),
                      [](const TrialValues& v) { return v.t1; });
        }
        if (has_check(config, CheckKind::T2Conservation)) {
            aggregate("t2", false, config.tol_t2.value_or(kT2Tol),
                      [](const TrialValues& v) { return v.t2; });
        }
        if (has_check(config, CheckKind::T1Inequality)) {
            aggregate("t1-ineq", true, config.tol_ineq.value_or(kIneqTol),
                      [](const TrialValues& v) { return v.ineq; });
        }
        if (has_check(config, CheckKind::Eq1)) {
            aggregate("eq1", true, config.tol_eq1.value_or(kEq1Tol),
                      [](const TrialValues& v) { return v.eq1; });
        }
        if (config.verify_dense) {
            aggregate("dense-gap", false, default_t1_tol(d) * 1e-2,
                      [](const TrialValues& v) { return v.dense_gap; });
        }
        for (const auto& v : values) dim.slb_negative_count += v.slb_negatives;

        if (config.collect_trials) {
            for (std::size_t r = 0; r < config.ranks.size(); ++r) {
                for (std::size_t t = 0; t < per_rank; ++t) {
                    const TrialValues& v = values[r * per_rank + t];
                    auto push = [&](const char* name, double val) {
                        if (!std::isnan(val)) {
                            report.trial_rows.push_back(
                                {d, config.ranks[r], t, v.seed, name, val});
                        }
                    };
                    push("t1", v.t1);
                    push("t2", v.t2);
                    push("t1-ineq", v.ineq);
                    push("eq1", v.eq1);
                }
            }
        }

        dim.seconds = std::chrono::duration<double>(
            std::chrono::steady_clock::now() - t_start).count();
        report.per_dim.push_back(std::move(dim));
    }
    return report;
}

namespace {

nlohmann::json config_to_json(const SweepConfig& cfg) {
    nlohmann::json j;
    j["dims"] = cfg.dims;
    j["trials"] = cfg.trials;
    j["ranks"] = cfg.ranks;
    j["seed"] = cfg.seed;
    nlohmann::json checks = nlohmann::json::array();
    for (CheckKind k : cfg.checks) checks.push_back(check_name(k));
    j["checks"] = std::move(checks);
    j["jobs"] = cfg.jobs;
    j["dense"] = cfg.verify_dense;
    nlohmann::json tols;
    auto put = [&](const char* name, const std::optional<double>& v) {
        if (v) tols[name] = *v; else tols[name] = nullptr;
    };
    put("t1", cfg.tol_t1);
    put("t2", cfg.tol_t2);
    put("t1-ineq", cfg.tol_ineq);
    put("eq1", cfg.tol_eq1);
    j["tols"] = std::move(tols);
    return j;
}

}  // namespace

std::string report_to_json(const SweepReport& report) {
    nlohmann::json j;
    j["config"] = config_to_json(report.config);
    nlohmann::json dims = nlohmann::json::array();
    for (const auto& dim : report.per_dim) {
        nlohmann::json dj;
        dj["d"] = dim.d;
        if (!dim.error.empty()) {
            dj["error"] = dim.error;
        } else {
            nlohmann::json checks;
            for (const auto& [name, agg] : dim.checks) {
                nlohmann::json cj;
                cj["trials"] = agg.trials;
                if (agg.is_inequality) {
                    cj["min_slack"] = agg.min_slack;
                    cj["mean_slack"] = agg.mean;
                } else {
                    cj["max_abs_residual"] = agg.max_abs_residual;
                    cj["mean_abs_residual"] = agg.mean;
                }
                cj["worst_seed"] = agg.worst_seed;
                cj["tol"] = agg.tol;
                cj["violations"] = agg.violations;
                cj["pass"] = agg.pass;
                checks[name] = std::move(cj);
            }
            dj["checks"] = std::move(checks);
            dj["slb_negative_count"] = dim.slb_negative_count;
        }
        dims.push_back(std::move(dj));
    }
    j["per_dim"] = std::move(dims);
    j["failures"] = report.failures;
    j["pass"] = report.pass;
    return j.dump(2);
}

void save_report(const SweepReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("save_report: cannot open '" + path + "' for writing");
    out << report_to_json(report) << '\n';
}

void save_trials_csv(const SweepReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("save_trials_csv: cannot open '" + path + "' for writing");
    out << "d,rank,trial,seed,check,value\n";
    out.precision(17);
    for (const auto& row : report.trial_rows) {
        out << row.d << ',' << row.rank << ',' << row.trial << ',' << row.seed << ','
            << row.check << ',' << row.value << '\n';
    }
}

}  // namespace mubkit
