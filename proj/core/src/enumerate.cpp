#include "fracext/enumerate.hpp"

#include <algorithm>

#include "fracext/bitset.hpp"
#include "fracext/errors.hpp"

namespace fracext {

namespace {

struct Enumerator {
    const std::vector<Bitset>& nbr;  // adjacency among candidates (local ids)
    const std::vector<int>& local_to_global;
    std::vector<int> base;  // required vertices (global ids, sorted)
    const std::function<void(const std::vector<int>&)>& visit;
    long long budget;
    long long emitted = 0;
    long long nodes = 0;

    void emit(const std::vector<int>& locals) {
        if (++emitted > budget)
            throw budget_exceeded_error("independent-set enumeration exceeded budget", budget);
        std::vector<int> out = base;
        for (int l : locals) out.push_back(local_to_global[l]);
        std::sort(out.begin(), out.end());
        visit(out);
    }

    void tick() {
        if (++nodes > 64 * budget)
            throw budget_exceeded_error("independent-set enumeration exceeded budget", budget);
    }

    // All independent subsets of `allowed` with local id >= from, extending `chosen`.
    void all_sets(int from, std::vector<int>& chosen, const Bitset& allowed) {
        tick();
        emit(chosen);
        for (int c = from; c < allowed.capacity(); ++c) {
            if (!allowed.test(c)) continue;
            Bitset next = allowed;
            next.subtract(nbr[c]);
            next.reset(c);
            chosen.push_back(c);
            all_sets(c + 1, chosen, next);
            chosen.pop_back();
        }
    }

    // Bron-Kerbosch with pivoting over the complement: maximal independent
    // sets among the candidates.
    void maximal_sets(std::vector<int>& chosen, Bitset cand, Bitset excluded) {
        tick();
        if (!cand.any() && !excluded.any()) {
            emit(chosen);
            return;
        }
        // pivot: vertex of cand|excluded with the most complement-neighbors
        // inside cand, so the branch set cand \ N_complement(pivot) is small
        int pivot = -1, best = -1;
        for (const Bitset* pool : {&cand, &excluded})
            for (int u = pool->first(); u >= 0; u = pool->next(u)) {
                Bitset rest = cand;
                rest.subtract(nbr[u]);
                rest.reset(u);
                int cnt = rest.count();
                if (cnt > best) {
                    pivot = u;
                    best = cnt;
                }
            }
        Bitset branch = cand;
        if (pivot >= 0) {
            Bitset skip = cand;
            skip.subtract(nbr[pivot]);
            skip.reset(pivot);
            branch.subtract(skip);
        }
        for (int v = branch.first(); v >= 0; v = branch.next(v)) {
            Bitset new_cand = cand, new_excl = excluded;
            new_cand.subtract(nbr[v]);
            new_cand.reset(v);
            new_excl.subtract(nbr[v]);
            new_excl.reset(v);
            chosen.push_back(v);
            maximal_sets(chosen, new_cand, new_excl);
            chosen.pop_back();
            cand.reset(v);
            excluded.set(v);
        }
    }
};

}  // namespace

void enumerate_independent_sets(const Graph& g, const EnumerationConstraints& constraints,
                                const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<char> banned(g.vertex_count(), 0), required(g.vertex_count(), 0);
    for (int v : constraints.forbidden) banned[v] = 1;
    for (int v : constraints.required) {
        if (banned[v]) throw precondition_error("vertex both required and forbidden");
        required[v] = 1;
    }
    std::vector<int> base(constraints.required);
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    if (!is_independent(g, base))
        throw precondition_error("required vertices are not independent");
    for (int v : base)
        for (int w : g.neighbors(v)) banned[w] = 1;

    std::vector<int> local_to_global;
    std::vector<int> global_to_local(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!banned[v] && !required[v]) {
            global_to_local[v] = (int)local_to_global.size();
            local_to_global.push_back(v);
        }
    int m = (int)local_to_global.size();
    std::vector<Bitset> nbr(m, Bitset(m));
    for (int l = 0; l < m; ++l)
        for (int w : g.neighbors(local_to_global[l]))
            if (global_to_local[w] >= 0) nbr[l].set(global_to_local[w]);

    Enumerator en{nbr, local_to_global, base, visit, constraints.budget};
    std::vector<int> chosen;
    if (constraints.maximal_only) {
        Bitset cand(m);
        for (int l = 0; l < m; ++l) cand.set(l);
        en.maximal_sets(chosen, cand, Bitset(m));
    } else {
        Bitset allowed(m);
        for (int l = 0; l < m; ++l) allowed.set(l);
        en.all_sets(0, chosen, allowed);
    }
}

std::vector<std::vector<int>> all_independent_sets(const Graph& g,
                                                   const EnumerationConstraints& constraints) {
    std::vector<std::vector<int>> out;
    enumerate_independent_sets(g, constraints,
                               [&](const std::vector<int>& s) { out.push_back(s); });
    return out;
}

}  // namespace fracext
