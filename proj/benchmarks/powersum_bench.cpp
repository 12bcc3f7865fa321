#include <benchmark/benchmark.h>

#include "wcount/connected_subsets.hpp"
#include "wcount/generators.hpp"
#include "wcount/interpolation.hpp"
#include "wcount/powersum.hpp"

namespace {

using namespace wcount;

WeightedInstance scaling(int n) {
    Rng rng(derive_seed(2024, static_cast<uint64_t>(n)));
    return scaling_instance(rng, n);
}

void BM_SigmaFast(benchmark::State& state) {
    auto inst = scaling(static_cast<int>(state.range(0)));
    const int k = static_cast<int>(state.range(1));
    uint64_t sets = 0;
    for (auto _ : state) {
        auto res = sigma_fast(inst, k);
        sets = res.subsets_enumerated;
        benchmark::DoNotOptimize(res.sigma.data());
    }
    state.counters["subsets"] = static_cast<double>(sets);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SigmaFast)
    ->ArgsProduct({{250, 500, 1000, 2000, 4000}, {4, 6}})
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);

void BM_SigmaFastUnpruned(benchmark::State& state) {
    auto inst = scaling(static_cast<int>(state.range(0)));
    FastOptions o;
    o.prune = false;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sigma_fast(inst, 6, o).sigma.data());
    }
}
BENCHMARK(BM_SigmaFastUnpruned)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_ConnectedSubsets(benchmark::State& state) {
    auto g = column_graph(scaling(static_cast<int>(state.range(0))).a);
    const int k = static_cast<int>(state.range(1));
    for (auto _ : state) {
        uint64_t count = 0;
        for (int v = 0; v < static_cast<int>(g.size()); ++v) {
            for_each_connected_subset(g, k, v, [&](std::span<const int>) { ++count; });
        }
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_ConnectedSubsets)->ArgsProduct({{1000}, {3, 4, 5, 6}})->Unit(benchmark::kMillisecond);

void BM_ApproxW(benchmark::State& state) {
    auto inst = scaling(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(approx_w(inst).value);
    }
}
BENCHMARK(BM_ApproxW)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
