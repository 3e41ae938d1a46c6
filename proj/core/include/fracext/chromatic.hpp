#pragma once

#include "fracext/graphs.hpp"
#include "fracext/rational.hpp"

namespace fracext {

// Exact fractional chromatic number via the covering LP with column
// generation; pricing is exact branch-and-bound MWIS.  Intended for small
// graphs; throws budget_exceeded_error when pricing exceeds the budget.
Rational frac_chromatic(const Graph& g, long long mwis_budget = 50'000'000);

// Exact fractional chromatic number p/q of kneser(p,q), certified by the
// element-star primal solution and the uniform dual fractional clique whose
// feasibility rests on the certified independence number.
Rational frac_chromatic_kneser(int p, int q);

// Certified independence number of kneser(p,q): the circular-arc double
// count bounds alpha by (max intersecting arcs per cyclic order) * C(p,q)/p,
// computed exactly, and the element star attains it.
Integer kneser_alpha_certified(int p, int q);

}  // namespace fracext
