#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracext/algebraic.hpp"

namespace fracext {

enum class Provenance { proved, conjectured, upper_bound_only };

std::string provenance_to_string(Provenance p);

struct GValue {
    AlgebraicValue value;
    Provenance provenance = Provenance::proved;
    std::string source;
};

// The four-case formula valid for k = 2 or k >= 3 (any d >= 3), and for all
// k >= 2 when d = 3.
GValue g_base(const Rational& k, int d);

// The exact values on (part of) k in (2,3): d = 4 for k in [2,3); d = 6 for
// k = 2 or k in [2.5,3).
GValue g_new(const Rational& k, int d);

// Conjectured exact values: d = 5 on [2,3), d = 6 on [2,2.5),
// d = 7 on [2,2.5) and [2.5,3).
GValue g_conjectured(const Rational& k, int d);

// Proved value when available, else conjectured, else the constructive upper
// bound where one applies; nullopt when nothing is known.
std::optional<GValue> g_best_known(const Rational& k, int d);

struct DiscontinuityPoint {
    Rational k;
    std::optional<GValue> left;   // limit from below
    std::optional<GValue> right;  // value/limit from above
};

// The conjectured discontinuity points 2 + 1/m, m = 1..floor(d/2)-1, with
// one-sided values of the best-known g where formulas exist.
std::vector<DiscontinuityPoint> discontinuity_report(int d);

// CSV lines "k,d,value_5dp,provenance,source" for a sweep of k values.
std::string g_values_csv(const std::vector<Rational>& ks, const std::vector<int>& ds);

}  // namespace fracext
