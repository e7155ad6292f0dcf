// mubkit command line: generate MUB sets and states, run theorem checks and
// ensemble sweeps. Machine-readable JSON on stdout, human summaries on stderr.
// Exit codes: 0 pass, 1 theorem violation, 2 usage/format/certification error.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mubkit/entropy.hpp"
#include "mubkit/errors.hpp"
#include "mubkit/mub.hpp"
#include "mubkit/states.hpp"
#include "mubkit/theorems.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitError = 2;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("MUBKIT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw mubkit::FormatError("MUBKIT_SEED is not a valid 64-bit integer");
        }
    }
    return 0;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

nlohmann::json result_to_json(const mubkit::TheoremResult& r) {
    nlohmann::json j;
    j["kind"] = mubkit::check_name(r.kind);
    j["d"] = r.d;
    j["m"] = r.m;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["residual_or_slack"] = r.residual_or_slack;
    j["tol"] = r.tol;
    j["pass"] = r.pass;
    j["basis_labels"] = r.basis_labels;
    return j;
}

mubkit::BipartiteState load_bipartite(const std::string& path) {
    auto loaded = mubkit::load_state(path);
    if (!loaded.bipartite) {
        throw mubkit::FormatError("state file '" + path +
                                  "' holds a single-system state; checks need a bipartite one");
    }
    return loaded.joint;
}

int cmd_mub_gen(std::size_t d, const std::string& out_path) {
    const mubkit::MubSet ms = mubkit::build_full_mub_set(d);
    mubkit::save_bases(ms, out_path);
    nlohmann::json j;
    j["d"] = d;
    j["bases"] = ms.bases.size();
    j["out"] = out_path;
    std::cout << j.dump() << '\n';
    std::cerr << "wrote " << ms.bases.size() << " certified bases for d=" << d
              << " to " << out_path << '\n';
    return kExitPass;
}

int cmd_state_gen(const std::string& kind, std::size_t d, std::optional<std::size_t> rank,
                  std::uint64_t seed, const std::string& out_path) {
    mubkit::BipartiteState s;
    if (kind == "bell") {
        s = mubkit::maximally_entangled(d);
    } else if (kind == "classical") {
        s = mubkit::classical_correlated(d);
    } else if (kind == "random") {
        mubkit::RandomStream rng(seed);
        s = mubkit::random_bipartite(d, rank.value_or(d * d), rng);
    } else if (kind == "product-random") {
        mubkit::RandomStream rng(seed);
        const std::size_t r = rank.value_or(d);
        const auto a = mubkit::random_density(d, r, rng);
        const auto b = mubkit::random_density(d, r, rng);
        s = mubkit::product_state(a, b);
    } else {
        throw mubkit::DomainError("unknown state kind '" + kind + "'");
    }
    mubkit::save_state(s, out_path);
    nlohmann::json j;
    j["kind"] = kind;
    j["d"] = d;
    j["seed"] = seed;
    j["out"] = out_path;
    std::cout << j.dump() << '\n';
    std::cerr << "wrote " << kind << " state (d=" << d << ") to " << out_path << '\n';
    return kExitPass;
}

int cmd_verify(const std::string& check, const std::string& state_path,
               const std::string& bases_path, std::optional<double> tol,
               std::size_t theta, std::size_t tau, const std::string& subset_csv,
               bool dense) {
    const mubkit::BipartiteState s = load_bipartite(state_path);
    const mubkit::MubSet ms = mubkit::load_bases(bases_path);

    mubkit::TheoremResult result;
    if (check == "t1") {
        result = mubkit::check_t1_equality(s, ms, tol, dense);
    } else if (check == "t2") {
        result = mubkit::check_t2_conservation(s, ms, tol, dense);
    } else if (check == "t1-ineq") {
        std::vector<mubkit::OrthonormalBasis> bases;
        if (subset_csv.empty()) {
            bases = ms.bases;
        } else {
            for (const auto& token : split_csv(subset_csv)) {
                std::size_t idx = 0;
                try {
                    idx = static_cast<std::size_t>(std::stoul(token));
                } catch (const std::exception&) {
                    throw mubkit::FormatError("--subset: bad index '" + token + "'");
                }
                if (idx >= ms.bases.size()) {
                    throw mubkit::DomainError("--subset index " + token +
                                              " outside the loaded set of " +
                                              std::to_string(ms.bases.size()) + " bases");
                }
                bases.push_back(ms.bases[idx]);
            }
        }
        result = mubkit::check_t1_inequality(s, bases, tol, dense);
    } else if (check == "eq1") {
        if (theta >= ms.bases.size() || tau >= ms.bases.size()) {
            throw mubkit::DomainError("--theta/--tau outside the loaded set of " +
                                      std::to_string(ms.bases.size()) + " bases");
        }
        result = mubkit::check_eq1(s, ms.bases[theta], ms.bases[tau], tol);
    } else {
        throw mubkit::DomainError("unknown check '" + check + "'");
    }

    std::cout << result_to_json(result).dump() << '\n';
    std::cerr << mubkit::check_name(result.kind) << ": "
              << (result.pass ? "pass" : "VIOLATION")
              << " (residual_or_slack " << result.residual_or_slack
              << ", tol " << result.tol << ")\n";
    return result.pass ? kExitPass : kExitViolation;
}

int cmd_sweep(const mubkit::SweepConfig& cfg, const std::string& out_path,
              const std::string& csv_path) {
    mubkit::SweepReport report = mubkit::run_sweep(cfg);
    if (!out_path.empty()) mubkit::save_report(report, out_path);
    if (!csv_path.empty()) mubkit::save_trials_csv(report, csv_path);
    std::cout << mubkit::report_to_json(report) << '\n';

    bool any_error = false;
    for (const auto& dim : report.per_dim) {
        if (!dim.error.empty()) {
            any_error = true;
            std::cerr << "d=" << dim.d << ": ERROR " << dim.error << '\n';
            continue;
        }
        std::cerr << "d=" << dim.d << " (" << dim.seconds << " s):";
        for (const auto& [name, agg] : dim.checks) {
            std::cerr << ' ' << name << (agg.pass ? " pass" : " FAIL");
        }
        std::cerr << '\n';
    }
    if (any_error) return kExitError;
    return report.pass ? kExitPass : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mutually unbiased bases, linear-entropy uncertainty and "
                 "correlation-conservation checks"};
    app.require_subcommand(1);

    // mub gen
    auto* mub = app.add_subcommand("mub", "basis-set operations");
    mub->require_subcommand(1);
    auto* mub_gen = mub->add_subcommand("gen", "construct and save a complete MUB set");
    std::size_t mub_d = 0;
    std::string mub_out;
    mub_gen->add_option("--d", mub_d, "dimension")->required();
    mub_gen->add_option("--out", mub_out, "output JSON path")->required();

    // state gen
    auto* state = app.add_subcommand("state", "state-file operations");
    state->require_subcommand(1);
    auto* state_gen = state->add_subcommand("gen", "generate and save a bipartite state");
    std::string sg_kind;
    std::size_t sg_d = 0;
    std::optional<std::size_t> sg_rank;
    std::optional<std::uint64_t> sg_seed;
    std::string sg_out;
    state_gen->add_option("--kind", sg_kind, "bell|classical|random|product-random")->required();
    state_gen->add_option("--d", sg_d, "local dimension")->required();
    state_gen->add_option("--rank", sg_rank, "rank for random kinds");
    state_gen->add_option("--seed", sg_seed, "RNG seed (default MUBKIT_SEED or 0)");
    state_gen->add_option("--out", sg_out, "output JSON path")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run one theorem check on files");
    std::string v_check, v_state, v_bases, v_subset;
    std::optional<double> v_tol;
    std::size_t v_theta = 0, v_tau = 1;
    bool v_dense = false;
    verify->add_option("--check", v_check, "t1|t1-ineq|t2|eq1")->required();
    verify->add_option("--state", v_state, "state JSON path")->required();
    verify->add_option("--bases", v_bases, "bases JSON path")->required();
    verify->add_option("--tol", v_tol, "tolerance override");
    verify->add_option("--theta", v_theta, "basis index for eq1 (default 0)");
    verify->add_option("--tau", v_tau, "basis index for eq1 (default 1)");
    verify->add_option("--subset", v_subset, "comma-separated basis indices for t1-ineq");
    verify->add_flag("--dense", v_dense, "verify via the dense measured-state route");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "randomized ensemble sweep");
    std::string sw_dims = "2,3", sw_ranks = "1,half,full", sw_checks = "t1,t2";
    std::size_t sw_trials = 1000, sw_jobs = 1;
    std::optional<std::uint64_t> sw_seed;
    std::optional<double> sw_tol_t1, sw_tol_t2, sw_tol_ineq, sw_tol_eq1;
    std::string sw_out, sw_csv;
    bool sw_dense = false;
    sweep->add_option("--d", sw_dims, "comma-separated dimensions (default 2,3)");
    sweep->add_option("--trials", sw_trials, "trials per (d, rank) cell");
    sweep->add_option("--ranks", sw_ranks, "rank tokens: int|half|full (default 1,half,full)");
    sweep->add_option("--seed", sw_seed, "base seed (default MUBKIT_SEED or 0)");
    sweep->add_option("--checks", sw_checks, "subset of t1,t1-ineq,t2,eq1");
    sweep->add_option("--jobs", sw_jobs, "worker threads (default 1)");
    sweep->add_option("--tol-t1", sw_tol_t1, "override t1 tolerance");
    sweep->add_option("--tol-t2", sw_tol_t2, "override t2 tolerance");
    sweep->add_option("--tol-ineq", sw_tol_ineq, "override t1-ineq tolerance");
    sweep->add_option("--tol-eq1", sw_tol_eq1, "override eq1 tolerance");
    sweep->add_option("--out", sw_out, "report JSON path");
    sweep->add_option("--csv", sw_csv, "per-trial CSV path");
    sweep->add_flag("--dense", sw_dense, "also run the dense route and compare");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11 prints its own message; fold help exits into the error code contract
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitError;
    }

    try {
        if (mub_gen->parsed()) {
            return cmd_mub_gen(mub_d, mub_out);
        }
        if (state_gen->parsed()) {
            return cmd_state_gen(sg_kind, sg_d, sg_rank,
                                 sg_seed ? *sg_seed : default_seed(), sg_out);
        }
        if (verify->parsed()) {
            return cmd_verify(v_check, v_state, v_bases, v_tol, v_theta, v_tau, v_subset,
                              v_dense);
        }
        if (sweep->parsed()) {
            mubkit::SweepConfig cfg;
            cfg.dims.clear();
            for (const auto& token : split_csv(sw_dims)) {
                cfg.dims.push_back(static_cast<std::size_t>(std::stoul(token)));
            }
            cfg.trials = sw_trials;
            cfg.ranks = split_csv(sw_ranks);
            cfg.seed = sw_seed ? *sw_seed : default_seed();
            cfg.checks.clear();
            for (const auto& token : split_csv(sw_checks)) {
                if (token == "t1") cfg.checks.push_back(mubkit::CheckKind::T1Equality);
                else if (token == "t1-ineq") cfg.checks.push_back(mubkit::CheckKind::T1Inequality);
                else if (token == "t2") cfg.checks.push_back(mubkit::CheckKind::T2Conservation);
                else if (token == "eq1") cfg.checks.push_back(mubkit::CheckKind::Eq1);
                else throw mubkit::DomainError("unknown check '" + token + "'");
            }
            cfg.jobs = sw_jobs;
            cfg.tol_t1 = sw_tol_t1;
            cfg.tol_t2 = sw_tol_t2;
            cfg.tol_ineq = sw_tol_ineq;
            cfg.tol_eq1 = sw_tol_eq1;
            cfg.verify_dense = sw_dense;
            cfg.collect_trials = !sw_csv.empty();
            return cmd_sweep(cfg, sw_out, sw_csv);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
