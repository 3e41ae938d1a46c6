#include "fracext/mwis.hpp"

#include <algorithm>

#include "fracext/bitset.hpp"
#include "fracext/errors.hpp"

namespace fracext {

namespace {

struct Solver {
    int m;
    std::vector<Bitset> nbr;        // adjacency among locals
    std::vector<Rational> w;        // local weights, > 0
    std::vector<Rational> suffix;   // suffix[i] = sum of w[j], j >= i
    long long budget;
    long long nodes = 0;

    Rational best_weight = 0;
    std::vector<int> best_set;
    std::vector<int> current;

    // Upper bound: greedy clique cover in index order; each clique
    // contributes the weight of its first (heaviest) member.
    Rational bound(const Bitset& cand) const {
        Rational out = 0;
        Bitset left = cand;
        for (int v = left.first(); v >= 0; v = left.first()) {
            out += w[v];
            left.reset(v);
            // grow a clique through v greedily
            Bitset common = left;
            common &= nbr[v];
            for (int u = common.first(); u >= 0; u = common.first()) {
                left.reset(u);
                common.reset(u);
                common &= nbr[u];
            }
        }
        return out;
    }

    void dfs(const Bitset& cand, const Rational& cur) {
        if (++nodes > budget)
            throw budget_exceeded_error("max-weight independent set search", budget);
        int v = cand.first();
        if (v < 0) {
            if (cur > best_weight) {
                best_weight = cur;
                best_set = current;
            }
            return;
        }
        if (cur + bound(cand) <= best_weight) return;
        // include v
        Bitset in = cand;
        in.reset(v);
        in.subtract(nbr[v]);
        current.push_back(v);
        dfs(in, cur + w[v]);
        current.pop_back();
        // exclude v
        Bitset out = cand;
        out.reset(v);
        dfs(out, cur);
    }
};

}  // namespace

MwisResult max_weight_independent_set(const Graph& g, const std::vector<Rational>& weights,
                                      const std::vector<int>& candidates,
                                      long long node_budget) {
    std::vector<int> locals;
    for (int v : candidates) {
        if (weights[v] < 0) throw precondition_error("mwis: negative weight");
        if (weights[v] > 0) locals.push_back(v);
    }
    // heaviest first; ties by id for determinism
    std::stable_sort(locals.begin(), locals.end(),
                     [&](int a, int b) { return weights[a] > weights[b]; });
    int m = (int)locals.size();
    Solver solver;
    solver.m = m;
    solver.budget = node_budget;
    solver.w.resize(m);
    solver.nbr.assign(m, Bitset(m));
    std::vector<int> local_of(g.vertex_count(), -1);
    for (int i = 0; i < m; ++i) {
        solver.w[i] = canonical(weights[locals[i]]);
        local_of[locals[i]] = i;
    }
    for (int i = 0; i < m; ++i)
        for (int u : g.neighbors(locals[i]))
            if (local_of[u] >= 0) solver.nbr[i].set(local_of[u]);

    Bitset cand(m);
    for (int i = 0; i < m; ++i) cand.set(i);
    solver.dfs(cand, 0);

    MwisResult out;
    out.weight = solver.best_weight;
    out.nodes = solver.nodes;
    for (int l : solver.best_set) out.set.push_back(locals[l]);
    std::sort(out.set.begin(), out.set.end());
    return out;
}

}  // namespace fracext
