#pragma once

#include <string>
#include <vector>

#include "fracext/combinatorics.hpp"
#include "fracext/intervals.hpp"

namespace fracext {

// A family of measure-one sets C_1..C_m inside [0, span).
struct Precoloring {
    std::vector<IntervalSet> sets;
    std::vector<SubsetLabel> labels;  // defining subset of [p'] per set (may be empty)
    Rational span = 0;
};

// The triple (f_o, f_e, Y): f_o equipartitions [0,k+eps) into p parts of
// measure (k+eps)/p; f_e partitions a measure-k subset into p parts of
// measure 1/q; both intersect every precolor set proportionally.
struct PseudoRandomPartition {
    int p = 0, q = 0;
    Rational k, eps;
    std::vector<IntervalSet> f_o, f_e;
    IntervalSet y;

    Rational span() const { return k + eps; }
    IntervalSet f_o_union(SubsetLabel a) const;
    IntervalSet f_e_union(SubsetLabel a) const;
};

// C(p',q) sets; the set for X is the union of [(i-1)/q, i/q) over i in X.
Precoloring canonical_precoloring(int p_prime, int q);

PseudoRandomPartition build_pseudorandom(const Precoloring& pre, int p, int q,
                                         const Rational& eps);

enum class RestrictVariant { D1, D3 };

// Per-ray base palettes f_o^i(j), subsets of f_o(j) of measure 1/q whose
// intersection with c_i has measure 1/p (D1) or (1-eps)/p (D3).
std::vector<IntervalSet> restrict_fo(const PseudoRandomPartition& part, const IntervalSet& c_i,
                                     RestrictVariant variant);

struct PartitionReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

PartitionReport verify_pseudorandom(const PseudoRandomPartition& part, const Precoloring& pre);

std::string partition_to_json(const PseudoRandomPartition& part);

}  // namespace fracext
