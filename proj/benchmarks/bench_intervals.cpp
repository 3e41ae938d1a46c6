#include <benchmark/benchmark.h>

#include <random>

#include "fracext/intervals.hpp"

using namespace fracext;

namespace {

IntervalSet random_set(std::mt19937& rng, int pieces) {
    std::uniform_int_distribution<int> num(0, 256), den(1, 16);
    std::vector<IntervalSet::Interval> soup;
    for (int i = 0; i < pieces; ++i) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        a.canonicalize();
        b.canonicalize();
        if (a > b) std::swap(a, b);
        soup.push_back({a, b});
    }
    return IntervalSet::from_intervals(std::move(soup));
}

}  // namespace

static void BM_IntervalUnion(benchmark::State& state) {
    std::mt19937 rng(1);
    IntervalSet a = random_set(rng, (int)state.range(0));
    IntervalSet b = random_set(rng, (int)state.range(0));
    for (auto _ : state) {
        auto u = unite(a, b);
        benchmark::DoNotOptimize(u);
    }
}
BENCHMARK(BM_IntervalUnion)->Arg(8)->Arg(64);

static void BM_IntervalCarve(benchmark::State& state) {
    std::mt19937 rng(2);
    IntervalSet a = random_set(rng, (int)state.range(0));
    Rational half = a.measure() / 2;
    for (auto _ : state) {
        auto c = carve(a, half);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_IntervalCarve)->Arg(8)->Arg(64);

BENCHMARK_MAIN();
