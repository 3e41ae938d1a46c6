#pragma once

#include <cstdint>
#include <vector>

#include "fracext/rational.hpp"

namespace fracext {

// q-element subset of [p] (ground set 1..p, p <= 64) as a bit pattern;
// bit i-1 set means element i is present.  Constant-time disjointness.
using SubsetLabel = uint64_t;

Integer binomial(int n, int k);
long long binomial_ll(int n, int k);

// All q-subsets of [p] in lexicographic order of their element lists.
std::vector<SubsetLabel> all_subsets(int p, int q);

std::vector<int> label_elements(SubsetLabel mask);
SubsetLabel label_from_elements(const std::vector<int>& elements);
std::string label_to_string(SubsetLabel mask);

inline bool labels_disjoint(SubsetLabel a, SubsetLabel b) { return (a & b) == 0; }
inline SubsetLabel first_q_elements(int q) { return (q == 64) ? ~0ull : ((1ull << q) - 1); }

}  // namespace fracext
