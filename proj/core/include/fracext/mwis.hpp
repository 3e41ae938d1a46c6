#pragma once

#include <vector>

#include "fracext/graphs.hpp"
#include "fracext/rational.hpp"

namespace fracext {

struct MwisResult {
    Rational weight;
    std::vector<int> set;
    long long nodes = 0;
};

// Exact maximum-weight independent set over the vertices listed in
// `candidates` (weights outside are ignored; negative weights rejected).
// Branch and bound with a greedy clique-cover bound; throws
// budget_exceeded_error past `node_budget`.
MwisResult max_weight_independent_set(const Graph& g, const std::vector<Rational>& weights,
                                      const std::vector<int>& candidates,
                                      long long node_budget = 50'000'000);

}  // namespace fracext
