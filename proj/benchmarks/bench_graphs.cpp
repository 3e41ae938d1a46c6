#include <benchmark/benchmark.h>

#include "fracext/enumerate.hpp"
#include "fracext/graphs.hpp"

using namespace fracext;

static void BM_BuildKneser(benchmark::State& state) {
    int p = (int)state.range(0), q = (int)state.range(1);
    for (auto _ : state) {
        Graph g = kneser(p, q);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_BuildKneser)->Args({5, 2})->Args({9, 4})->Args({11, 5});

static void BM_BuildUniversal(benchmark::State& state) {
    for (auto _ : state) {
        Graph g = build_universal(5, 2, (int)state.range(0), 1);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_BuildUniversal)->Arg(6)->Arg(7);

static void BM_MaximalIndependentSets(benchmark::State& state) {
    Graph g = kneser((int)state.range(0), (int)state.range(1));
    for (auto _ : state) {
        long long count = 0;
        enumerate_independent_sets(g, {.maximal_only = true},
                                   [&](const std::vector<int>&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_MaximalIndependentSets)->Args({5, 2})->Args({7, 3});
