#include "fracext/chromatic.hpp"

#include <algorithm>
#include <set>

#include "fracext/errors.hpp"
#include "fracext/mwis.hpp"
#include "fracext/simplex.hpp"

namespace fracext {

namespace {

// Greedy maximal independent set containing seed, scanning ids ascending.
std::vector<int> greedy_maximal(const Graph& g, int seed) {
    std::vector<char> blocked(g.vertex_count(), 0);
    std::vector<int> out{seed};
    for (int u : g.neighbors(seed)) blocked[u] = 1;
    blocked[seed] = 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (blocked[v]) continue;
        out.push_back(v);
        blocked[v] = 1;
        for (int u : g.neighbors(v)) blocked[u] = 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Rational frac_chromatic(const Graph& g, long long mwis_budget) {
    int n = g.vertex_count();
    if (n == 0) throw precondition_error("frac_chromatic: empty graph");

    std::set<std::vector<int>> column_set;
    std::vector<std::vector<int>> columns;
    for (int v = 0; v < n; ++v) {
        auto col = greedy_maximal(g, v);
        if (column_set.insert(col).second) columns.push_back(col);
    }

    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;

    while (true) {
        LinearProgram lp;
        lp.direction = Direction::Minimize;
        for (size_t c = 0; c < columns.size(); ++c) lp.add_var(1);
        std::vector<std::vector<std::pair<int, Rational>>> row_coeffs(n);
        for (size_t c = 0; c < columns.size(); ++c)
            for (int v : columns[c]) row_coeffs[v].push_back({(int)c, Rational(1)});
        for (int v = 0; v < n; ++v)
            lp.add_row(std::move(row_coeffs[v]), Sense::GE, 1, "cover" + std::to_string(v));
        SimplexResult res = simplex_solve(lp);
        if (res.status != SolveStatus::Optimal)
            throw std::logic_error("covering LP must be feasible and bounded");

        MwisResult pricing = max_weight_independent_set(g, res.dual, all, mwis_budget);
        if (pricing.weight <= 1) return res.objective;
        // maximalize the witness before adding it
        std::vector<char> blocked(n, 0);
        for (int v : pricing.set) {
            blocked[v] = 1;
            for (int u : g.neighbors(v)) blocked[u] = 1;
        }
        std::vector<int> col = pricing.set;
        for (int v = 0; v < n; ++v)
            if (!blocked[v]) {
                col.push_back(v);
                blocked[v] = 1;
                for (int u : g.neighbors(v)) blocked[u] = 1;
            }
        std::sort(col.begin(), col.end());
        if (!column_set.insert(col).second)
            throw std::logic_error("column generation produced a duplicate column");
        columns.push_back(std::move(col));
    }
}

Integer kneser_alpha_certified(int p, int q) {
    if (q < 1 || p < 2 * q) throw precondition_error("alpha certificate: p >= 2q required");
    if (p > 20) throw precondition_error("alpha certificate: p <= 20 supported");
    // Arcs of length q on the standard cyclic order of [p]; exact maximum
    // number of pairwise-intersecting arcs by exhaustive search.
    std::vector<uint64_t> arc(p);
    for (int start = 0; start < p; ++start) {
        uint64_t mask = 0;
        for (int i = 0; i < q; ++i) mask |= 1ull << ((start + i) % p);
        arc[start] = mask;
    }
    int best = 0;
    for (uint32_t sub = 1; sub < (1u << p); ++sub) {
        int cnt = __builtin_popcount(sub);
        if (cnt <= best) continue;
        bool ok = true;
        for (int i = 0; i < p && ok; ++i) {
            if (!(sub >> i & 1)) continue;
            for (int j = i + 1; j < p && ok; ++j)
                if ((sub >> j & 1) && (arc[i] & arc[j]) == 0) ok = false;
        }
        if (ok) best = cnt;
    }
    // Every q-set is an arc in q!(p-q)! of the (p-1)! cyclic orders, all of
    // which are equivalent to the standard one, so
    //   alpha * q!(p-q)! <= (p-1)! * best  =>  alpha <= best * C(p,q) / p.
    Integer cap = best * binomial(p, q);
    if (cap % p != 0)
        throw std::logic_error("alpha certificate: non-integral bound");
    cap /= p;
    Integer star = binomial(p - 1, q - 1);
    if (star > cap) throw std::logic_error("alpha certificate: star exceeds the bound");
    if (star != cap)
        throw std::logic_error("alpha certificate: bound not attained by the star");
    return star;
}

Rational frac_chromatic_kneser(int p, int q) {
    Integer alpha = kneser_alpha_certified(p, q);
    // Primal: weight 1/q on each of the p element stars covers every vertex
    // exactly q/q = 1 and totals p/q.  Dual: weight 1/alpha on every vertex
    // is a fractional clique (no independent set beats alpha), totalling
    // C(p,q)/C(p-1,q-1) = p/q.  Equal objectives certify optimality.
    Rational primal = rat(p, q);
    Rational dual = Rational(binomial(p, q)) / Rational(alpha);
    dual.canonicalize();
    if (primal != dual) throw std::logic_error("kneser chromatic certificate mismatch");
    return primal;
}

}  // namespace fracext
