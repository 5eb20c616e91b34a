// Serial reference vs OpenMP kernels. Arg 0 = serial, 1 = parallel.

#include "lmg/hlvqe.hpp"
#include "lmg/solver.hpp"

#include <benchmark/benchmark.h>

#include <numeric>

using namespace lmg;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) == 0 ? Execution::serial : Execution::parallel; }

void BM_WignerMatrix(benchmark::State& state) {
    const int two_j = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(wigner_d_matrix(two_j, 0.9, -1, mode(state)));
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_WignerMatrix)->ArgsProduct({{0, 1}, {64, 128, 160}})->Unit(benchmark::kMillisecond);

void BM_SweepLambda(benchmark::State& state) {
    const int n = static_cast<int>(state.range(1));
    std::vector<int> cutoffs;
    for (int c = 2; c <= n; c += 2) cutoffs.push_back(c);
    const auto params = ModelParams::from_vbar(n, 1.0, 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(sweep_lambda(params, cutoffs, {}, mode(state)));
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_SweepLambda)->ArgsProduct({{0, 1}, {32, 64}})->Unit(benchmark::kMillisecond);

void BM_SampledEnsemble(benchmark::State& state) {
    const auto params = ModelParams::from_vbar(30, 1.0, 2.0);
    HlvqeOptions opts;
    opts.init_beta = 0.8;
    opts.backend = Backend::sampled(100000, 0);
    std::vector<std::uint64_t> seeds(10);
    std::iota(seeds.begin(), seeds.end(), 1);
    for (auto _ : state) benchmark::DoNotOptimize(run_ensemble(params, 4, opts, seeds, mode(state)));
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_SampledEnsemble)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
