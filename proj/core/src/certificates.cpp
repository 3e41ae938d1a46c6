#include "fracext/certificates.hpp"

#include <algorithm>

#include "fracext/bitset.hpp"
#include "fracext/chromatic.hpp"
#include "fracext/enumerate.hpp"
#include "fracext/errors.hpp"
#include "fracext/mwis.hpp"
#include "fracext/spectral.hpp"

namespace fracext {

namespace {

Rational expansion_ratio_bruteforce(const Graph& g, long long budget) {
    int n = g.vertex_count();
    std::vector<Bitset> nbr(n, Bitset(n));
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) nbr[v].set(u);
    Rational best = -1;
    enumerate_independent_sets(g, {.budget = budget}, [&](const std::vector<int>& s) {
        if (s.empty()) return;
        Bitset nb(n);
        for (int v : s) nb |= nbr[v];
        Rational ratio = Rational(nb.count(), (int)s.size());
        ratio.canonicalize();
        if (best < 0 || ratio < best) best = ratio;
    });
    return best;
}

Rational expansion_ratio_certified(int p, int q) {
    Rational target = rat(p - q, q);
    if (p == 2 * q) {
        // perfect matching: partners of an independent set are distinct
        return target;  // = 1
    }
    // exact lambda_2 of the normalized adjacency
    auto spectrum = kneser_spectrum_certified(p, q);
    Integer deg = binomial(p - q, q);
    std::vector<Rational> abs_norm;
    for (const auto& e : spectrum) {
        Rational v = Rational(abs(e.eigenvalue)) / Rational(deg);
        v.canonicalize();
        abs_norm.push_back(v);
    }
    std::sort(abs_norm.rbegin(), abs_norm.rend());
    Rational lambda2 = abs_norm[1];
    if (lambda2 != rat(q, p - q))
        throw std::logic_error("expansion certificate: unexpected lambda_2");

    // independence number cap
    Integer alpha = kneser_alpha_certified(p, q);
    Integer count = binomial(p, q);
    Rational c = Rational(alpha) / Rational(count);
    c.canonicalize();
    if (c != rat(q, p)) throw std::logic_error("expansion certificate: unexpected alpha");

    // expansion bound |N(I)| >= |I| / ((1-c) lambda^2 + c) at c = q/p, valid
    // for every independent set since |I| <= alpha = c n; the denominator
    // evaluates to q/(p-q), so the ratio is at least (p-q)/q.
    Rational denom = (1 - c) * lambda2 * lambda2 + c;
    if (1 / denom != target) throw std::logic_error("expansion certificate: bound mismatch");

    // the element star attains the bound exactly
    Graph g = kneser(p, q);
    std::vector<int> star;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.vertex(v).label & 1ull) star.push_back(v);
    Bitset nb(g.vertex_count());
    std::vector<Bitset> nbr(g.vertex_count(), Bitset(g.vertex_count()));
    for (int v : star)
        for (int u : g.neighbors(v)) nb.set(u);
    Rational star_ratio = Rational(nb.count(), (int)star.size());
    star_ratio.canonicalize();
    if (star_ratio != target)
        throw std::logic_error("expansion certificate: star does not attain the bound");
    return target;
}

}  // namespace

Rational expansion_ratio(int p, int q, long long budget) {
    if (q < 1 || p < 2 * q) throw precondition_error("expansion_ratio: p >= 2q required");
    Graph g = kneser(p, q);
    try {
        return expansion_ratio_bruteforce(g, budget);
    } catch (const budget_exceeded_error&) {
        return expansion_ratio_certified(p, q);
    }
}

std::vector<Rational> fractional_clique_d6(int p, int q) {
    Rational k = rat(p, q);
    if (q % 2 != 0) throw precondition_error("fractional_clique_d6: q must be even");
    if (k < Rational(5, 2) || k >= 3)
        throw precondition_error("fractional_clique_d6: p/q in [5/2,3) required");
    Graph g = kneser(p, q);
    SubsetLabel x = first_q_elements(q);
    Integer v2_count = binomial(q, q / 2) * binomial(p - q, q / 2);
    Rational w1 = Rational(1) / Rational(binomial(p - q, q));
    Rational w2 = 2 * (k - 2) / Rational(v2_count);
    w1.canonicalize();
    w2.canonicalize();
    std::vector<Rational> weights(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        SubsetLabel label = g.vertex(v).label;
        if (label == x)
            weights[v] = 3 - k;
        else if ((label & x) == 0)
            weights[v] = w1;
        else if (__builtin_popcountll(label & x) == q / 2)
            weights[v] = w2;
    }
    return weights;
}

CliqueCertificate certify_fractional_clique_d6(int p, int q, long long budget) {
    Graph g = kneser(p, q);
    auto weights = fractional_clique_d6(p, q);
    CliqueCertificate cert;
    cert.weight = 0;
    for (const auto& w : weights) cert.weight += w;
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    cert.mwis = max_weight_independent_set(g, weights, all, budget).weight;
    return cert;
}

DualCertificate dual_certificate_d6(int p, int q, int p_prime, long long budget) {
    Rational k = rat(p, q);
    if (q % 2 != 0) throw precondition_error("dual_certificate_d6: q must be even");
    if (k < Rational(5, 2) || k >= 3)
        throw precondition_error("dual_certificate_d6: p/q in [5/2,3) required");
    Rational kp = rat(p_prime, q);
    AlgebraicValue eps0 = AlgebraicValue::quadratic_root(1, k, -1, true);
    if (!(kp > k) || eps0.compare(kp - k) <= 0)
        throw precondition_error("dual_certificate_d6: p'/q must lie in (k, k + g(k,6))");

    Graph kneser_graph = kneser(p, q);
    auto x = fractional_clique_d6(p, q);

    SubsetLabel xlabel = first_q_elements(q);
    Graph ray = build_ray({p, q, 3, xlabel});
    int special = ray.special().front();

    // y on the embedded copy: (X,1) when X is disjoint from [q], else (X,2);
    // footprint weights 1/C(p-q,q) on the base neighbors of [q].
    std::vector<Rational> y(ray.vertex_count(), 0);
    Rational base_w = Rational(1) / Rational(binomial(p - q, q));
    base_w.canonicalize();
    for (int v = 0; v < kneser_graph.vertex_count(); ++v) {
        SubsetLabel label = kneser_graph.vertex(v).label;
        int level = (label & xlabel) == 0 ? 1 : 2;
        int target = ray.find_vertex(label, level, 0);
        y[target] = x[v];
    }
    std::vector<Rational> y_with_base = y;
    for (int v = 0; v < ray.vertex_count(); ++v) {
        const Vertex& vert = ray.vertex(v);
        if (vert.level == 3 && (vert.label & xlabel) == 0) y_with_base[v] = base_w;
    }

    DualCertificate cert;
    cert.objective = k + rat(q, p_prime);

    // (a) sets containing the special vertex: candidates exclude s and N(s)
    std::vector<int> cand_a;
    for (int v = 0; v < ray.vertex_count(); ++v)
        if (v != special && !ray.adjacent(v, special)) cand_a.push_back(v);
    cert.mwis_with_special = max_weight_independent_set(ray, y_with_base, cand_a, budget).weight;

    // (b) all sets; base and special carry no weight on this side
    std::vector<int> cand_b(ray.vertex_count());
    for (int v = 0; v < ray.vertex_count(); ++v) cand_b[v] = v;
    cert.mwis_without_special = max_weight_independent_set(ray, y, cand_b, budget).weight;

    // the double-count identity behind the objective: each point is covered
    // by exactly C(p'-1,q-1) of the C(p',q) precolor sets
    Rational coverage = Rational(binomial(p_prime - 1, q - 1)) / Rational(binomial(p_prime, q));
    coverage.canonicalize();
    if (coverage != rat(q, p_prime))
        throw std::logic_error("dual certificate: coverage identity failed");

    cert.feasible = cert.mwis_with_special <= 1 && cert.mwis_without_special <= 1;
    return cert;
}

LoadResult neighborhood_load(const Graph& g, const FractionalColoring& coloring) {
    LoadResult out;
    out.load = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        IntervalSet un;
        for (int u : g.neighbors(v)) un = unite(un, coloring.colors[u]);
        Rational m = un.measure();
        if (m > out.load) {
            out.load = m;
            out.vertex = v;
        }
    }
    return out;
}

}  // namespace fracext
