// End-to-end exercises of the command line binary: exit-code contract,
// stdout JSON, file round trips. Runs the real executable via /bin/sh.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "mubkit/mub.hpp"
#include "mubkit/states.hpp"
#include "test_support.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(MUBKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) {
        r.stdout_text.append(buf, n);
        if (n < sizeof buf) break;
    }
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string tmp(const std::string& stem) { return testsupport::temp_path(stem); }

}  // namespace

TEST_CASE("mub gen writes a certified loadable file") {
    const std::string out = tmp("cli_bases") + ".json";
    const RunResult r = run_cli("mub gen --d 3 --out " + out);
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.stdout_text);
    CHECK(j.at("bases") == 4);

    const mubkit::MubSet ms = mubkit::load_bases(out);
    CHECK(ms.complete);
    CHECK(ms.d == 3);
    std::filesystem::remove(out);
}

TEST_CASE("mub gen exit codes for unsupported dimensions") {
    const std::string out = tmp("cli_bases_bad") + ".json";
    CHECK(run_cli("mub gen --d 6 --out " + out).exit_code == 2);
    CHECK(run_cli("mub gen --d 1 --out " + out).exit_code == 2);
    CHECK(!std::filesystem::exists(out));
}

TEST_CASE("state gen determinism and fixture values") {
    const std::string a = tmp("cli_state_a") + ".json";
    const std::string b = tmp("cli_state_b") + ".json";
    CHECK(run_cli("state gen --kind random --d 2 --rank 4 --seed 7 --out " + a).exit_code == 0);
    CHECK(run_cli("state gen --kind random --d 2 --rank 4 --seed 7 --out " + b).exit_code == 0);

    std::ifstream fa(a), fb(b);
    const std::string ca((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
    const std::string cb((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
    CHECK(ca == cb);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}

TEST_CASE("verify pipeline on the bell fixture") {
    const std::string bases = tmp("cli_verify_bases") + ".json";
    const std::string state = tmp("cli_verify_state") + ".json";
    REQUIRE(run_cli("mub gen --d 2 --out " + bases).exit_code == 0);
    REQUIRE(run_cli("state gen --kind bell --d 2 --out " + state).exit_code == 0);

    SUBCASE("t1 passes with a small residual") {
        const RunResult r = run_cli("verify --check t1 --state " + state + " --bases " + bases);
        CHECK(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.stdout_text);
        CHECK(j.at("pass") == true);
        CHECK(std::abs(j.at("residual_or_slack").get<double>()) <= 1e-8 * 8);
        CHECK(j.at("lhs").get<double>() == doctest::Approx(3.0));
    }
    SUBCASE("t2 passes") {
        const RunResult r = run_cli("verify --check t2 --state " + state + " --bases " + bases);
        CHECK(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.stdout_text);
        CHECK(std::abs(j.at("residual_or_slack").get<double>()) <= 1e-10);
        CHECK(j.at("rhs").get<double>() == doctest::Approx(0.75));
    }
    SUBCASE("t1-ineq with a subset") {
        const RunResult r = run_cli("verify --check t1-ineq --subset 0,1 --state " + state +
                                    " --bases " + bases);
        CHECK(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.stdout_text);
        CHECK(j.at("m") == 2);
        CHECK(j.at("residual_or_slack").get<double>() >= -1e-10);
    }
    SUBCASE("eq1 with explicit basis indices") {
        const RunResult r = run_cli("verify --check eq1 --theta 0 --tau 1 --state " + state +
                                    " --bases " + bases);
        CHECK(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.stdout_text);
        CHECK(std::abs(j.at("residual_or_slack").get<double>()) <= 1e-10);
    }
    SUBCASE("dense flag agrees") {
        const RunResult r = run_cli("verify --check t1 --dense --state " + state +
                                    " --bases " + bases);
        CHECK(r.exit_code == 0);
    }
    SUBCASE("classical fixture I_L = 1/4") {
        const std::string cstate = tmp("cli_classical") + ".json";
        REQUIRE(run_cli("state gen --kind classical --d 2 --out " + cstate).exit_code == 0);
        const RunResult r = run_cli("verify --check t2 --state " + cstate + " --bases " + bases);
        CHECK(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.stdout_text);
        CHECK(j.at("rhs").get<double>() == doctest::Approx(0.25));
        std::filesystem::remove(cstate);
    }

    std::filesystem::remove(bases);
    std::filesystem::remove(state);
}

TEST_CASE("verify rejects tampered state files with exit 2") {
    const std::string bases = tmp("cli_bad_bases") + ".json";
    const std::string state = tmp("cli_bad_state") + ".json";
    REQUIRE(run_cli("mub gen --d 2 --out " + bases).exit_code == 0);
    REQUIRE(run_cli("state gen --kind bell --d 2 --out " + state).exit_code == 0);

    nlohmann::json j;
    {
        std::ifstream in(state);
        in >> j;
    }
    j["rho"][0][0][0] = 0.4;  // trace 0.9
    std::ofstream(state) << j.dump();

    const RunResult r = run_cli("verify --check t1 --state " + state + " --bases " + bases);
    CHECK(r.exit_code == 2);

    std::filesystem::remove(bases);
    std::filesystem::remove(state);
}

TEST_CASE("bell state gen at d=3 reaches the correlation maximum") {
    const std::string state = tmp("cli_bell3") + ".json";
    REQUIRE(run_cli("state gen --kind bell --d 3 --out " + state).exit_code == 0);
    const auto loaded = mubkit::load_state(state);
    REQUIRE(loaded.bipartite);
    // I_L of the maximally entangled state is 1 - 1/d^2 = 8/9
    const std::string bases = tmp("cli_bell3_bases") + ".json";
    REQUIRE(run_cli("mub gen --d 3 --out " + bases).exit_code == 0);
    const RunResult r = run_cli("verify --check t2 --state " + state + " --bases " + bases);
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.stdout_text);
    CHECK(j.at("rhs").get<double>() == doctest::Approx(8.0 / 9.0).epsilon(1e-10));
    std::filesystem::remove(state);
    std::filesystem::remove(bases);
}

TEST_CASE("sweep command produces a report and honors exit codes") {
    const std::string report = tmp("cli_report") + ".json";
    const std::string csv = tmp("cli_trials") + ".csv";

    SUBCASE("small passing sweep") {
        const RunResult r = run_cli("sweep --d 2 --trials 20 --seed 42 --checks t1,t2 --out " +
                                    report + " --csv " + csv);
        CHECK(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.stdout_text);
        CHECK(j.at("pass") == true);
        REQUIRE(std::filesystem::exists(report));
        REQUIRE(std::filesystem::exists(csv));

        std::ifstream rin(report);
        nlohmann::json jr;
        rin >> jr;
        CHECK(jr.at("per_dim")[0].at("checks").count("t1") == 1);
        CHECK(jr.at("per_dim")[0].at("checks").at("t1").count("max_abs_residual") == 1);
        CHECK(jr.at("per_dim")[0].at("checks").at("t1").count("worst_seed") == 1);

        std::filesystem::remove(report);
        std::filesystem::remove(csv);
    }
    SUBCASE("unsupported dimension yields exit 2") {
        const RunResult r = run_cli("sweep --d 6 --trials 2 --checks t1");
        CHECK(r.exit_code == 2);
    }
    SUBCASE("seed replay reproduces the stdout report") {
        const RunResult a = run_cli("sweep --d 2 --trials 5 --seed 11 --checks t1");
        const RunResult b = run_cli("sweep --d 2 --trials 5 --seed 11 --checks t1");
        CHECK(a.exit_code == 0);
        CHECK(a.stdout_text == b.stdout_text);
    }
    SUBCASE("MUBKIT_SEED env var feeds the default seed") {
        const RunResult with_flag = run_cli("sweep --d 2 --trials 5 --seed 123 --checks t1");
        const std::string cmd = std::string("MUBKIT_SEED=123 ") + MUBKIT_CLI_PATH +
                                " sweep --d 2 --trials 5 --checks t1 2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::string text;
        char buf[4096];
        while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) {
            text.append(buf, n);
            if (n < sizeof buf) break;
        }
        pclose(pipe);
        CHECK(text == with_flag.stdout_text);
    }
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("mub gen --d 3").exit_code == 2);          // missing --out
    CHECK(run_cli("state gen --kind warp --d 2 --out /tmp/x.json").exit_code == 2);
    CHECK(run_cli("verify --check nope --state a --bases b").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}
