// Microbenchmarks for the sweep hot path: measurement blocks, theorem checks,
// eigensolver, MUB construction.
#include <benchmark/benchmark.h>

#include "mubkit/entropy.hpp"
#include "mubkit/mub.hpp"
#include "mubkit/states.hpp"
#include "mubkit/theorems.hpp"

using namespace mubkit;

namespace {

BipartiteState make_state(std::size_t d, std::uint64_t seed = 1) {
    RandomStream rng(seed);
    return random_bipartite(d, d * d, rng);
}

void BM_MeasurementBlocks(benchmark::State& state) {
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    const MubSet ms = build_full_mub_set(d);
    const BipartiteState s = make_state(d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(measurement_blocks(s, ms.bases[1]));
    }
}
BENCHMARK(BM_MeasurementBlocks)->Arg(2)->Arg(3)->Arg(5)->Arg(9);

void BM_MeasureADense(benchmark::State& state) {
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    const MubSet ms = build_full_mub_set(d);
    const BipartiteState s = make_state(d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(measure_A(s, ms.bases[1]));
    }
}
BENCHMARK(BM_MeasureADense)->Arg(2)->Arg(3)->Arg(5)->Arg(9);

void BM_CheckT1(benchmark::State& state) {
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    const MubSet ms = build_full_mub_set(d);
    const BipartiteState s = make_state(d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_t1_equality(s, ms));
    }
}
BENCHMARK(BM_CheckT1)->Arg(2)->Arg(3)->Arg(5)->Arg(9);

void BM_CheckT2(benchmark::State& state) {
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    const MubSet ms = build_full_mub_set(d);
    const BipartiteState s = make_state(d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_t2_conservation(s, ms));
    }
}
BENCHMARK(BM_CheckT2)->Arg(2)->Arg(3)->Arg(5)->Arg(9);

void BM_HermitianEigenvalues(benchmark::State& state) {
    const std::size_t side = static_cast<std::size_t>(state.range(0));
    RandomStream rng(2);
    const BipartiteState s = random_bipartite(side, side * side, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eigenvalues(s.mat));
    }
}
BENCHMARK(BM_HermitianEigenvalues)->Arg(3)->Arg(5)->Arg(9);

void BM_BuildMubSet(benchmark::State& state) {
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_full_mub_set(d));
    }
}
BENCHMARK(BM_BuildMubSet)->Arg(2)->Arg(8)->Arg(9)->Arg(13);

void BM_SweepTrialT1T2(benchmark::State& state) {
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    SweepConfig cfg;
    cfg.dims = {d};
    cfg.trials = 1;
    cfg.ranks = {"full"};
    for (auto _ : state) {
        cfg.seed += 1;
        benchmark::DoNotOptimize(run_sweep(cfg));
    }
}
BENCHMARK(BM_SweepTrialT1T2)->Arg(2)->Arg(5)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
