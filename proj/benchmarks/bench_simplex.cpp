#include <benchmark/benchmark.h>

#include <random>

#include "fracext/extension.hpp"
#include "fracext/simplex.hpp"

using namespace fracext;

static void BM_SimplexCovering(benchmark::State& state) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(0, 3);
    int n = (int)state.range(0), m = n;
    LinearProgram lp;
    for (int j = 0; j < n; ++j) lp.add_var(1 + coeff(rng));
    for (int i = 0; i < m; ++i) {
        std::vector<std::pair<int, Rational>> row;
        for (int j = 0; j < n; ++j)
            if (int c = coeff(rng); c > 0) row.push_back({j, c});
        if (row.empty()) row.push_back({i % n, 1});
        lp.add_row(std::move(row), Sense::GE, 1 + i % 4);
    }
    for (auto _ : state) {
        auto res = simplex_solve(lp);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_SimplexCovering)->Arg(16)->Arg(48);

static void BM_ExtensionDecide(benchmark::State& state) {
    ExtensionSolver solver(5, 2, 5);
    Rational eps(2, 5);
    for (auto _ : state) {
        auto res = solver.decide(eps);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_ExtensionDecide);
