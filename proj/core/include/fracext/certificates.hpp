#pragma once

#include <vector>

#include "fracext/coloring.hpp"
#include "fracext/graphs.hpp"

namespace fracext {

// Exact minimum of |N(I)|/|I| over nonempty independent sets of kneser(p,q).
// Brute force within the enumeration budget; beyond it, the certified
// spectral route (exact spectrum + expansion bound + independence-number
// certificate + the star attaining the bound).
Rational expansion_ratio(int p, int q, long long budget = 5'000'000);

// Vertex weights of the distance-six fractional clique on kneser(p,q):
// 3-p/q on [q], 1/C(p-q,q) on the sets disjoint from [q], 2(p/q-2)/|V_2| on
// the sets meeting [q] in exactly q/2 elements.  Requires q even and
// p/q in [2.5,3).
std::vector<Rational> fractional_clique_d6(int p, int q);

struct CliqueCertificate {
    Rational weight;  // total weight, expected p/q
    Rational mwis;    // exact max independent-set weight, expected 1
    bool ok() const { return mwis <= 1; }
};

CliqueCertificate certify_fractional_clique_d6(int p, int q, long long budget = 50'000'000);

struct DualCertificate {
    Rational objective;  // k + q/p'
    bool feasible = false;
    Rational mwis_with_special;     // check over sets containing the special vertex
    Rational mwis_without_special;  // check over all sets (empty-footprint side)
};

// Builds the dual solution of the distance-six lower bound on the ray
// R_{p,q,3} (clique weights on an embedded Kneser copy, footprint weights
// |N ∩ I|/C(p-q,q), zero on the rest) and verifies feasibility by exact
// MWIS.  Requires q even, k = p/q in [2.5,3) and k < p'/q < k + g(k,6).
DualCertificate dual_certificate_d6(int p, int q, int p_prime, long long budget = 300'000'000);

struct LoadResult {
    int vertex = -1;
    Rational load;
};

// Vertex whose neighborhood's color union has the largest measure.
LoadResult neighborhood_load(const Graph& g, const FractionalColoring& coloring);

}  // namespace fracext
