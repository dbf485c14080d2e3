#include <benchmark/benchmark.h>

#include "levysde/drift.hpp"
#include "levysde/experiment.hpp"
#include "levysde/solver.hpp"
#include "levysde/stable_levy.hpp"

namespace {

void BM_SampleStable(benchmark::State& state) {
    const levysde::StableParams params(1.5);
    levysde::RandomSource rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(levysde::sample_standard_symmetric_stable(params, rng));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SampleStable);

void BM_EvalDrift(benchmark::State& state) {
    const auto label = levysde::builtin_drift_labels()[static_cast<std::size_t>(state.range(0))];
    const auto spec = *levysde::builtin_drift(label);
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(levysde::eval_drift(spec, t, 0.3 + t));
        t += 1e-7;
        if (t > 1.0) t = 0.0;
    }
    state.SetLabel(std::string(label));
}
BENCHMARK(BM_EvalDrift)->DenseRange(0, 3);

void BM_SolveRandomised(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    levysde::RandomSource rng(7);
    const auto grid = levysde::sample_increment_grid(levysde::StableParams(1.5), n, 1.0, rng);
    const auto spec = levysde::weierstrass_drift();
    for (auto _ : state) {
        levysde::RandomSource theta_rng(11);
        auto traj = levysde::solve(levysde::SolverKind::randomised_em, spec, grid, 0.0, theta_rng);
        benchmark::DoNotOptimize(traj.y_values.back());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SolveRandomised)->RangeMultiplier(8)->Range(1 << 8, 1 << 14);

void BM_CoarsenToLevel5(benchmark::State& state) {
    levysde::RandomSource rng(3);
    const auto grid = levysde::sample_increment_grid(levysde::StableParams(1.5), 1 << 14, 1.0, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(levysde::coarsen(grid, 1 << 9).n_steps());
    }
}
BENCHMARK(BM_CoarsenToLevel5);

void BM_SimulateOne(benchmark::State& state) {
    levysde::StudyConfig config;
    config.alphas = {1.5};
    config.ref_level = static_cast<int>(state.range(0));
    config.levels = {5, 6, 7, 8};
    config.master_seed = 42;
    std::size_t sim = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(levysde::simulate_one(config, 0, sim++).randomised.back());
    }
}
BENCHMARK(BM_SimulateOne)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
