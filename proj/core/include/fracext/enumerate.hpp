#pragma once

#include <functional>
#include <vector>

#include "fracext/graphs.hpp"

namespace fracext {

struct EnumerationConstraints {
    std::vector<int> required;   // contained in every emitted set
    std::vector<int> forbidden;  // never contained
    bool maximal_only = false;   // only sets maximal subject to the constraints
    long long budget = 5'000'000;
};

// Exhaustive duplicate-free enumeration in a deterministic order.  The
// visitor receives each set as sorted vertex ids.  Throws
// budget_exceeded_error when more than `budget` sets would be emitted.
void enumerate_independent_sets(const Graph& g, const EnumerationConstraints& constraints,
                                const std::function<void(const std::vector<int>&)>& visit);

// Convenience wrapper collecting all sets (same budget semantics).
std::vector<std::vector<int>> all_independent_sets(const Graph& g,
                                                   const EnumerationConstraints& constraints);

}  // namespace fracext
