// Serial reference vs OpenMP kernels. Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include "ratbound/harness.hpp"

using namespace ratbound;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

RationalFunction sample(int n) {
    GeneratorSpec spec;
    spec.n = n;
    spec.t = n;
    spec.zero_region = ZeroLocation::outside(1.5);
    spec.seed = 1;
    spec.count = 1;
    return generate_one(spec, 0);
}

void BM_ModulusOnGrid(benchmark::State& state) {
    const auto r = sample(4);
    const auto grid = CircleGrid::unit(static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(modulus_on_grid(r, grid, exec_of(state)));
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_MarginsOnGrid(benchmark::State& state) {
    const auto r = sample(4);
    const auto grid = CircleGrid::unit(static_cast<std::size_t>(state.range(1)));
    const auto ctx = make_context(TheoremId::MainUpper, r, 1.5, 1024, Exec::Serial);
    for (auto _ : state) benchmark::DoNotOptimize(margins_on_grid(TheoremId::MainUpper, ctx, r, grid, exec_of(state)));
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_Certify(benchmark::State& state) {
    const auto r = sample(4);
    for (auto _ : state)
        benchmark::DoNotOptimize(certify(TheoremId::MainUpper, r, 1.5, static_cast<std::size_t>(state.range(1)),
                                         exec_of(state)));
}

void BM_Campaign(benchmark::State& state) {
    GeneratorSpec spec;
    spec.n = 3;
    spec.t = 3;
    spec.zero_region = ZeroLocation::outside(1.5);
    spec.seed = 7;
    spec.count = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(run_campaign(spec, TheoremId::MainUpper, 1024, exec_of(state)));
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_CountZeros(benchmark::State& state) {
    const auto r = sample(static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(count_zeros_in_disk(r.numer(), 2.0, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_ModulusOnGrid)->ArgsProduct({{0, 1}, {1024, 4096, 65536}});
BENCHMARK(BM_MarginsOnGrid)->ArgsProduct({{0, 1}, {1024, 4096, 65536}});
BENCHMARK(BM_Certify)->ArgsProduct({{0, 1}, {1024, 4096}});
BENCHMARK(BM_Campaign)->ArgsProduct({{0, 1}, {64, 256}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountZeros)->ArgsProduct({{0, 1}, {4, 8}});

BENCHMARK_MAIN();
