#include <doctest.h>

#include <random>
#include <set>

#include "fracext/enumerate.hpp"
#include "fracext/errors.hpp"

using namespace fracext;

namespace {

// 2^n brute-force oracle
std::set<std::vector<int>> brute_force_sets(const Graph& g, bool maximal_only) {
    int n = g.vertex_count();
    std::set<std::vector<int>> all;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) s.push_back(v);
        if (!is_independent(g, s)) continue;
        all.insert(s);
    }
    if (!maximal_only) return all;
    std::set<std::vector<int>> maximal;
    for (const auto& s : all) {
        bool is_maximal = true;
        for (int v = 0; v < n && is_maximal; ++v) {
            if (std::find(s.begin(), s.end(), v) != s.end()) continue;
            auto bigger = s;
            bigger.push_back(v);
            std::sort(bigger.begin(), bigger.end());
            if (all.count(bigger)) is_maximal = false;
        }
        if (is_maximal) maximal.insert(s);
    }
    return maximal;
}

Graph random_graph(std::mt19937& rng, int n, double density) {
    std::vector<Vertex> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = {i, (SubsetLabel)1ull << i, 0, 0};
    std::vector<std::pair<int, int>> edges;
    std::uniform_real_distribution<double> coin(0, 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < density) edges.push_back({i, j});
    return Graph::build(std::move(verts), std::move(edges), {}, n);
}

}  // namespace

TEST_CASE("petersen independent set counts") {
    Graph petersen = kneser(5, 2);
    auto all = all_independent_sets(petersen, {});
    CHECK(all.size() == 76);  // includes the empty set
    auto maximal = all_independent_sets(petersen, {.maximal_only = true});
    CHECK(maximal.size() == 15);
    int size4 = 0, size3 = 0;
    for (const auto& s : maximal) {
        if (s.size() == 4) ++size4;
        if (s.size() == 3) ++size3;
    }
    CHECK(size4 == 5);
    CHECK(size3 == 10);
}

TEST_CASE("required and forbidden constraints") {
    Graph petersen = kneser(5, 2);
    EnumerationConstraints cons;
    cons.required = {0};
    for (const auto& s : all_independent_sets(petersen, cons)) {
        CHECK(std::find(s.begin(), s.end(), 0) != s.end());
        for (int u : petersen.neighbors(0))
            CHECK(std::find(s.begin(), s.end(), u) == s.end());
    }
    cons.forbidden = {1, 2};
    for (const auto& s : all_independent_sets(petersen, cons)) {
        CHECK(std::find(s.begin(), s.end(), 1) == s.end());
        CHECK(std::find(s.begin(), s.end(), 2) == s.end());
    }
}

TEST_CASE("matches brute force on random small graphs") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = random_graph(rng, 3 + (int)(trial % 5) * 3, 0.15 + 0.08 * (trial % 4));
        for (bool maximal : {false, true}) {
            auto expect = brute_force_sets(g, maximal);
            auto got = all_independent_sets(g, {.maximal_only = maximal});
            std::set<std::vector<int>> got_set(got.begin(), got.end());
            CHECK(got.size() == got_set.size());  // duplicate-free
            CHECK(got_set == expect);
        }
    }
}

TEST_CASE("budget error") {
    Graph petersen = kneser(5, 2);
    CHECK_THROWS_AS(all_independent_sets(petersen, {.budget = 10}), budget_exceeded_error);
}

TEST_CASE("deterministic order") {
    Graph petersen = kneser(5, 2);
    CHECK(all_independent_sets(petersen, {}) == all_independent_sets(petersen, {}));
    CHECK(all_independent_sets(petersen, {.maximal_only = true}) ==
          all_independent_sets(petersen, {.maximal_only = true}));
}
