#pragma once

#include <utility>
#include <vector>

#include "fracext/rational.hpp"

namespace fracext {

// Canonical finite union of half-open intervals [a,b) with exact rational
// endpoints.  Invariants: a < b in every pair, pairs sorted by left endpoint,
// pairwise disjoint and non-adjacent.  Two equal sets have identical
// representation, so operator== is structural.
class IntervalSet {
  public:
    using Interval = std::pair<Rational, Rational>;

    IntervalSet() = default;
    IntervalSet(const Rational& lo, const Rational& hi);

    // Builds the canonical form from an arbitrary soup of intervals.
    static IntervalSet from_intervals(std::vector<Interval> soup);

    static IntervalSet empty_set() { return IntervalSet(); }

    const std::vector<Interval>& intervals() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    size_t piece_count() const { return parts_.size(); }

    Rational measure() const;
    bool contains_point(const Rational& x) const;
    // True iff every point of *this lies in other.
    bool subset_of(const IntervalSet& other) const;
    bool disjoint_with(const IntervalSet& other) const;

    friend bool operator==(const IntervalSet& a, const IntervalSet& b) = default;

    std::string to_text() const;              // "a/b:c/d,e/f:g/h"
    static IntervalSet from_text(const std::string& text);

  private:
    std::vector<Interval> parts_;
};

IntervalSet unite(const IntervalSet& s, const IntervalSet& t);
IntervalSet intersect(const IntervalSet& s, const IntervalSet& t);
IntervalSet subtract(const IntervalSet& s, const IntervalSet& t);

// Leftmost sub-portion of s with measure exactly m.  Every "arbitrary subset
// of measure m" choice in the constructions is resolved through this.
IntervalSet carve(const IntervalSet& s, const Rational& m);

// n pairwise disjoint leftmost carves of equal measure, union = s.
std::vector<IntervalSet> equipartition(const IntervalSet& s, int n);

}  // namespace fracext
