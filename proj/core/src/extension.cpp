#include "fracext/extension.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fracext/coloring.hpp"
#include "fracext/enumerate.hpp"
#include "fracext/errors.hpp"
#include "fracext/mwis.hpp"
#include "fracext/simplex.hpp"

namespace fracext {

Rational ExtensionInstance::total_mass() const {
    Rational total = 0;
    for (const auto& c : classes) total += c.mass;
    return total;
}

ExtensionInstance build_extension_instance(int p, int q, int d, const Rational& eps_in) {
    Rational eps = canonical(eps_in);
    if (q < 1 || p < 2 * q) throw precondition_error("extension instance: p >= 2q required");
    if (d < 4) throw precondition_error("extension instance: d >= 4 required");
    if (eps <= 0) throw precondition_error("extension instance: eps > 0 required");
    if (d % 4 == 3 && eps > 1)
        throw precondition_error("extension instance: d = 3 mod 4 needs eps <= 1");

    ExtensionInstance inst;
    inst.p = p;
    inst.q = q;
    inst.d = d;
    inst.k = rat(p, q);
    inst.eps = eps;
    int len = d % 2 == 0 ? d / 2 : (d - 1) / 2;
    inst.ray = std::make_shared<Graph>(build_ray({p, q, len, first_q_elements(q)}));
    inst.special = inst.ray->special().front();
    for (int v = 0; v < inst.ray->vertex_count(); ++v) {
        if (inst.ray->vertex(v).level == len)
            inst.base.push_back(v);
        else if (v != inst.special)
            inst.interior.push_back(v);
    }

    Rational span = inst.k + eps;
    auto push = [&](bool with_special, int elem, Rational mass) {
        if (mass < 0) throw std::logic_error("negative class mass");
        if (mass > 0) inst.classes.push_back({with_special, elem, std::move(mass)});
    };
    if (d % 2 == 0) {
        Rational in_cap = Rational(1) / (p + q * eps);  // |f_e(a) ∩ C_i|
        for (int a = 1; a <= p; ++a) {
            push(true, a, in_cap);
            push(false, a, rat(1, q) - in_cap);
        }
        push(true, 0, eps / span);
        push(false, 0, eps - eps / span);
    } else if (d % 4 == 1) {
        for (int a = 1; a <= p; ++a) {
            push(true, a, rat(1, p));
            push(false, a, rat(1, q) - rat(1, p));
        }
        push(false, 0, eps);
    } else {
        Rational in_cap = (1 - eps) / p;
        for (int a = 1; a <= p; ++a) {
            push(true, a, in_cap);
            push(false, a, rat(1, q) - in_cap);
        }
        push(true, 0, eps);
    }
    return inst;
}

namespace {

// ------------------------------------------------------------------
// column pool: per class, maximal independent sets subject to the class
// membership (exact footprint, special flag), as interior-vertex lists
// ------------------------------------------------------------------

struct Column {
    int class_id;
    std::vector<int> interior;  // covered interior vertices
};

std::vector<int> footprint_vertices(const ExtensionInstance& inst, const BoundaryClass& cls) {
    std::vector<int> out;
    if (cls.star_element == 0) return out;
    SubsetLabel bit = 1ull << (cls.star_element - 1);
    for (int v : inst.base)
        if (inst.ray->vertex(v).label & bit) out.push_back(v);
    return out;
}

std::vector<Column> enumerate_columns(const ExtensionInstance& inst, long long budget) {
    std::vector<Column> pool;
    long long left = budget;
    for (size_t c = 0; c < inst.classes.size(); ++c) {
        const auto& cls = inst.classes[c];
        EnumerationConstraints cons;
        cons.maximal_only = true;
        cons.budget = left;
        cons.required = footprint_vertices(inst, cls);
        if (cls.with_special) cons.required.push_back(inst.special);
        std::vector<char> is_required(inst.ray->vertex_count(), 0);
        for (int v : cons.required) is_required[v] = 1;
        for (int v : inst.base)
            if (!is_required[v]) cons.forbidden.push_back(v);
        if (!cls.with_special) cons.forbidden.push_back(inst.special);
        long long emitted = 0;
        enumerate_independent_sets(*inst.ray, cons, [&](const std::vector<int>& s) {
            ++emitted;
            Column col;
            col.class_id = (int)c;
            for (int v : s)
                if (!is_required[v]) col.interior.push_back(v);
            pool.push_back(std::move(col));
        });
        left -= emitted;
    }
    return pool;
}

// ------------------------------------------------------------------
// full LP over a column pool with lazy pricing
// ------------------------------------------------------------------

struct FullLpResult {
    Rational optimum;
};

FullLpResult solve_full_lp(const ExtensionInstance& inst, const std::vector<Column>& pool) {
    int n_interior = (int)inst.interior.size();
    int n_classes = (int)inst.classes.size();
    std::vector<int> interior_row(inst.ray->vertex_count(), -1);
    for (int i = 0; i < n_interior; ++i) interior_row[inst.interior[i]] = i;

    std::vector<char> active(pool.size(), 0);
    std::vector<int> active_list;
    auto activate = [&](size_t idx) {
        if (!active[idx]) {
            active[idx] = 1;
            active_list.push_back((int)idx);
        }
    };
    // initial columns: one per class, then greedy coverage
    for (int c = 0; c < n_classes; ++c)
        for (size_t i = 0; i < pool.size(); ++i)
            if (pool[i].class_id == c) {
                activate(i);
                break;
            }
    {
        std::vector<char> covered(n_interior, 0);
        for (int idx : active_list)
            for (int v : pool[idx].interior) covered[interior_row[v]] = 1;
        for (size_t i = 0; i < pool.size(); ++i) {
            bool useful = false;
            for (int v : pool[i].interior)
                if (!covered[interior_row[v]]) useful = true;
            if (!useful) continue;
            activate(i);
            for (int v : pool[i].interior) covered[interior_row[v]] = 1;
        }
        for (int r = 0; r < n_interior; ++r)
            if (!covered[r])
                throw std::logic_error("extension LP: interior vertex not coverable");
    }

    while (true) {
        LinearProgram lp;
        lp.direction = Direction::Minimize;
        for (size_t i = 0; i < active_list.size(); ++i) lp.add_var(1);
        std::vector<std::vector<std::pair<int, Rational>>> cover(n_interior), cls(n_classes);
        for (size_t i = 0; i < active_list.size(); ++i) {
            const Column& col = pool[active_list[i]];
            for (int v : col.interior) cover[interior_row[v]].push_back({(int)i, Rational(1)});
            cls[col.class_id].push_back({(int)i, Rational(1)});
        }
        for (int r = 0; r < n_interior; ++r) lp.add_row(std::move(cover[r]), Sense::GE, 1);
        for (int c = 0; c < n_classes; ++c)
            lp.add_row(std::move(cls[c]), Sense::GE, inst.classes[c].mass);
        SimplexResult res = simplex_solve(lp);
        if (res.status != SolveStatus::Optimal)
            throw std::logic_error("extension LP must be feasible and bounded");

        // price the whole pool
        std::vector<std::pair<Rational, size_t>> violated;
        for (size_t i = 0; i < pool.size(); ++i) {
            if (active[i]) continue;
            Rational red = 1 - res.dual[n_interior + pool[i].class_id];
            for (int v : pool[i].interior) red -= res.dual[interior_row[v]];
            if (red < 0) violated.push_back({red, i});
        }
        if (violated.empty()) return {res.objective};
        std::sort(violated.begin(), violated.end());
        for (size_t j = 0; j < violated.size() && j < 64; ++j) activate(violated[j].second);
    }
}

// ------------------------------------------------------------------
// column generation with exact MWIS pricing, for instances whose column
// pool is too large to enumerate
// ------------------------------------------------------------------

std::vector<int> class_candidates(const ExtensionInstance& inst, const BoundaryClass& cls) {
    std::vector<int> required = footprint_vertices(inst, cls);
    if (cls.with_special) required.push_back(inst.special);
    std::vector<int> out;
    for (int v : inst.interior) {
        bool ok = true;
        for (int r : required)
            if (inst.ray->adjacent(v, r)) ok = false;
        if (ok) out.push_back(v);
    }
    return out;
}

// greedy maximal independent subset of `candidates` seeded with `seed`
std::vector<int> greedy_column(const Graph& g, const std::vector<int>& candidates, int seed) {
    std::vector<char> in_cand(g.vertex_count(), 0), blocked(g.vertex_count(), 0);
    for (int v : candidates) in_cand[v] = 1;
    std::vector<int> out;
    auto take = [&](int v) {
        out.push_back(v);
        blocked[v] = 1;
        for (int u : g.neighbors(v)) blocked[u] = 1;
    };
    if (seed >= 0 && in_cand[seed]) take(seed);
    for (int v : candidates)
        if (!blocked[v]) take(v);
    std::sort(out.begin(), out.end());
    return out;
}

Rational solve_colgen_lp(const ExtensionInstance& inst, const ExtensionSolveOptions& opts) {
    const Graph& ray = *inst.ray;
    int n_interior = (int)inst.interior.size();
    int n_classes = (int)inst.classes.size();
    std::vector<int> interior_row(ray.vertex_count(), -1);
    for (int i = 0; i < n_interior; ++i) interior_row[inst.interior[i]] = i;

    std::vector<std::vector<int>> candidates(n_classes);
    for (int c = 0; c < n_classes; ++c) candidates[c] = class_candidates(inst, inst.classes[c]);

    std::set<std::pair<int, std::vector<int>>> column_set;
    std::vector<Column> columns;
    auto add_column = [&](int c, std::vector<int> interior) {
        auto key = std::make_pair(c, interior);
        if (!column_set.insert(key).second) return false;
        columns.push_back({c, std::move(interior)});
        return true;
    };
    for (int c = 0; c < n_classes; ++c) add_column(c, greedy_column(ray, candidates[c], -1));
    {
        std::vector<char> covered(n_interior, 0);
        for (const auto& col : columns)
            for (int v : col.interior) covered[interior_row[v]] = 1;
        for (int i = 0; i < n_interior; ++i) {
            if (covered[i]) continue;
            int v = inst.interior[i];
            for (int c = 0; c < n_classes; ++c) {
                if (std::find(candidates[c].begin(), candidates[c].end(), v) ==
                    candidates[c].end())
                    continue;
                auto col = greedy_column(ray, candidates[c], v);
                add_column(c, col);
                for (int u : col) covered[interior_row[u]] = 1;
                break;
            }
            if (!covered[i])
                throw std::logic_error("extension LP: interior vertex not coverable");
        }
    }

    while (true) {
        LinearProgram lp;
        lp.direction = Direction::Minimize;
        for (size_t i = 0; i < columns.size(); ++i) lp.add_var(1);
        std::vector<std::vector<std::pair<int, Rational>>> cover(n_interior), cls(n_classes);
        for (size_t i = 0; i < columns.size(); ++i) {
            for (int v : columns[i].interior)
                cover[interior_row[v]].push_back({(int)i, Rational(1)});
            cls[columns[i].class_id].push_back({(int)i, Rational(1)});
        }
        for (int r = 0; r < n_interior; ++r) lp.add_row(std::move(cover[r]), Sense::GE, 1);
        for (int c = 0; c < n_classes; ++c)
            lp.add_row(std::move(cls[c]), Sense::GE, inst.classes[c].mass);
        SimplexResult res = simplex_solve(lp);
        if (res.status != SolveStatus::Optimal)
            throw std::logic_error("extension LP must be feasible and bounded");

        std::vector<Rational> weights(ray.vertex_count(), 0);
        for (int i = 0; i < n_interior; ++i) weights[inst.interior[i]] = res.dual[i];
        bool improved = false;
        for (int c = 0; c < n_classes; ++c) {
            MwisResult pricing =
                max_weight_independent_set(ray, weights, candidates[c], opts.mwis_budget);
            if (pricing.weight <= 1 - res.dual[n_interior + c]) continue;
            // maximalize the witness inside the class candidate set
            std::vector<char> blocked(ray.vertex_count(), 0), in_set(ray.vertex_count(), 0);
            for (int v : pricing.set) {
                in_set[v] = 1;
                blocked[v] = 1;
                for (int u : ray.neighbors(v)) blocked[u] = 1;
            }
            std::vector<int> col = pricing.set;
            for (int v : candidates[c])
                if (!blocked[v]) {
                    col.push_back(v);
                    blocked[v] = 1;
                    for (int u : ray.neighbors(v)) blocked[u] = 1;
                }
            std::sort(col.begin(), col.end());
            if (!add_column(c, std::move(col)))
                throw std::logic_error("pricing returned a column the master already priced");
            improved = true;
        }
        if (!improved) return res.objective;
    }
}

// ------------------------------------------------------------------
// construction path: a verified ray coloring with the instance's base
// masses is an LP solution of value exactly k + eps
// ------------------------------------------------------------------

std::vector<CaseTag> matching_cases(const ExtensionInstance& inst) {
    // D7_HIGH is excluded: its base palette is not uniform across [p], so
    // it colors a different instance than the numerical procedure fixes.
    switch (inst.d % 4) {
        case 0: return {CaseTag::D0};
        case 1: return {CaseTag::D1};
        case 2: return inst.d == 6 ? std::vector<CaseTag>{CaseTag::D2, CaseTag::D6_HIGH}
                                   : std::vector<CaseTag>{CaseTag::D2};
        default: return {CaseTag::D3};
    }
}

// Extracts the per-element base palette from a ray coloring: pal(a) is the
// intersection of the colors of two base vertices meeting exactly in {a}.
IntervalSet base_palette(const ExtensionInstance& inst, const FractionalColoring& col, int a) {
    SubsetLabel bit = 1ull << (a - 1);
    for (int v : inst.base) {
        SubsetLabel first = inst.ray->vertex(v).label;
        if (!(first & bit)) continue;
        for (int u : inst.base) {
            SubsetLabel second = inst.ray->vertex(u).label;
            if (u != v && (first & second) == bit)
                return intersect(col.colors[v], col.colors[u]);
        }
    }
    throw std::logic_error("no base pair meets exactly in the element");
}

bool try_construction(const ExtensionInstance& inst, const Rational& eps) {
    for (CaseTag tag : matching_cases(inst)) {
        if (!applicability(tag, inst.k, inst.d)) continue;
        Precoloring pre;
        pre.sets.push_back(IntervalSet(0, 1));
        pre.span = 1;
        FractionalColoring col;
        try {
            PseudoRandomPartition part = build_pseudorandom(pre, inst.p, inst.q, eps);
            col = color_ray(tag, *inst.ray, inst.p, inst.q, inst.d, eps, pre.sets[0], part);
        } catch (const deficit_error&) {
            continue;
        }
        if (!verify_coloring(*inst.ray, col, {{inst.special, pre.sets[0]}}).ok())
            throw std::logic_error("construction produced an invalid coloring");
        // The verified coloring certifies the instance only if its base
        // palettes carry exactly the class masses and every base vertex is
        // colored by the union of its elements' palettes.
        bool match = true;
        std::vector<IntervalSet> pal(inst.p + 1);
        for (int a = 1; a <= inst.p && match; ++a) {
            pal[a] = base_palette(inst, col, a);
            if (pal[a].measure() != rat(1, inst.q)) match = false;
        }
        for (int v : inst.base) {
            if (!match) break;
            IntervalSet want;
            for (int e : label_elements(inst.ray->vertex(v).label)) want = unite(want, pal[e]);
            if (!(col.colors[v] == want)) match = false;
        }
        for (const auto& cls : inst.classes) {
            if (!match || cls.star_element == 0) continue;
            Rational inside = intersect(pal[cls.star_element], pre.sets[0]).measure();
            Rational have = cls.with_special ? inside : rat(1, inst.q) - inside;
            if (have != cls.mass) match = false;
        }
        if (match) return true;
    }
    return false;
}

// ------------------------------------------------------------------
// orbit-aggregated edge relaxation: a small exact LP whose optimum is a
// certified lower bound on the full program's optimum
// ------------------------------------------------------------------

struct OrbitRelaxation {
    LinearProgram lp;
    Rational target;  // k + eps
};

OrbitRelaxation build_orbit_relaxation(const ExtensionInstance& inst) {
    const Graph& ray = *inst.ray;
    SubsetLabel x = first_q_elements(inst.q);
    int p = inst.p, q = inst.q;
    int len = ray.vertex(inst.base.front()).level;

    // vertex orbits: (level, |label ∩ X|)
    std::map<std::pair<int, int>, std::vector<int>> orbits;
    std::vector<int> orbit_of(ray.vertex_count(), -1);
    for (int v : inst.interior) {
        const Vertex& vert = ray.vertex(v);
        orbits[{vert.level, __builtin_popcountll(vert.label & x)}].push_back(v);
    }
    std::vector<std::pair<int, int>> orbit_keys;
    for (auto& [key, members] : orbits) {
        for (int v : members) orbit_of[v] = (int)orbit_keys.size();
        orbit_keys.push_back(key);
    }
    int n_orbits = (int)orbit_keys.size();

    // class orbits: (with_special, side) with side 0 = star in X,
    // 1 = star outside X, 2 = empty footprint
    std::map<std::pair<bool, int>, std::pair<Rational, int>> class_orbit_map;  // mass, count
    for (const auto& cls : inst.classes) {
        int side = cls.star_element == 0 ? 2 : (cls.star_element <= q ? 0 : 1);
        auto key = std::make_pair(cls.with_special, side);
        auto it = class_orbit_map.find(key);
        if (it == class_orbit_map.end())
            class_orbit_map[key] = {cls.mass, 1};
        else {
            if (it->second.first != cls.mass)
                throw std::logic_error("class masses differ within an orbit");
            ++it->second.second;
        }
    }
    struct ClassOrbit {
        bool with_special;
        int side;  // 0,1 star sides; 2 empty
        Rational mass;
        int count;
    };
    std::vector<ClassOrbit> cos;
    for (auto& [key, val] : class_orbit_map)
        cos.push_back({key.first, key.second, val.first, val.second});

    // vertex-orbit predicates
    auto adjacent_to_special = [&](int orbit) {
        auto [level, t] = orbit_keys[orbit];
        return level <= 1 && t == 0;
    };
    auto footprint_forces_membership = [&](int orbit) {
        auto [level, t] = orbit_keys[orbit];
        return level == len - 1;  // only the last interior level sees the base
    };
    auto side_size = [&](int side) { return side == 0 ? q : p - q; };
    // membership counts of star elements relative to a label with t = |A∩X|
    auto member_count = [&](int side, int t, int mem) {
        int in_side = side == 0 ? t : q - t;
        return mem == 1 ? in_side : side_size(side) - in_side;
    };

    OrbitRelaxation out;
    out.target = inst.total_mass();
    LinearProgram& lp = out.lp;
    lp.direction = Direction::Minimize;

    std::vector<int> t_var(cos.size());
    for (size_t ci = 0; ci < cos.size(); ++ci)
        t_var[ci] = lp.add_var(Rational(cos[ci].count),
                               "T" + std::to_string(ci));

    // xi vars: [class orbit][vertex orbit][mem] (mem 0 only meaningful for
    // star classes; empty classes use mem = 1 slot)
    auto var_key = [&](size_t ci, int orbit, int mem) {
        return (ci * n_orbits + orbit) * 2 + mem;
    };
    std::vector<int> xi(cos.size() * n_orbits * 2, -1);
    for (size_t ci = 0; ci < cos.size(); ++ci) {
        const auto& co = cos[ci];
        for (int orbit = 0; orbit < n_orbits; ++orbit) {
            auto [level, t] = orbit_keys[orbit];
            if (co.with_special && adjacent_to_special(orbit)) continue;  // forced zero
            if (co.side == 2) {
                xi[var_key(ci, orbit, 1)] = lp.add_var(0);
                continue;
            }
            for (int mem : {1, 0}) {
                if (mem == 0 && footprint_forces_membership(orbit)) continue;  // forced zero
                if (member_count(co.side, t, mem) == 0) continue;  // never referenced
                xi[var_key(ci, orbit, mem)] = lp.add_var(0);
            }
        }
    }

    // class mass rows and caps
    for (size_t ci = 0; ci < cos.size(); ++ci) {
        lp.add_row({{t_var[ci], 1}}, Sense::GE, cos[ci].mass);
        for (int orbit = 0; orbit < n_orbits; ++orbit)
            for (int mem : {1, 0}) {
                int var = xi[var_key(ci, orbit, mem)];
                if (var >= 0)
                    lp.add_row({{var, 1}, {t_var[ci], -1}}, Sense::LE, 0);
            }
    }

    // coverage rows per vertex orbit
    for (int orbit = 0; orbit < n_orbits; ++orbit) {
        auto [level, t] = orbit_keys[orbit];
        std::vector<std::pair<int, Rational>> row;
        for (size_t ci = 0; ci < cos.size(); ++ci) {
            const auto& co = cos[ci];
            if (co.side == 2) {
                int var = xi[var_key(ci, orbit, 1)];
                if (var >= 0) row.push_back({var, 1});
                continue;
            }
            for (int mem : {1, 0}) {
                int var = xi[var_key(ci, orbit, mem)];
                if (var < 0) continue;
                int cnt = member_count(co.side, t, mem);
                if (cnt > 0) row.push_back({var, cnt});
            }
        }
        lp.add_row(std::move(row), Sense::GE, 1,
                   "cover(" + std::to_string(level) + "," + std::to_string(t) + ")");
    }

    // cross-exclusion rows for edges with a t=0 endpoint (the layer-one side
    // of the hand proofs); patterns keyed by the meet profile of the labels
    std::set<std::array<long long, 6>> seen_edges;
    std::set<std::tuple<size_t, int, int>> added_rows;
    for (int u : inst.interior) {
        const Vertex& vu = ray.vertex(u);
        int tu = __builtin_popcountll(vu.label & x);
        for (int v : ray.neighbors(u)) {
            if (orbit_of[v] < 0 || v == u) continue;
            const Vertex& vv = ray.vertex(v);
            int tv = __builtin_popcountll(vv.label & x);
            if (tu != 0 && tv != 0) continue;
            std::array<long long, 6> key{
                (long long)std::min(orbit_of[u], orbit_of[v]),
                (long long)std::max(orbit_of[u], orbit_of[v]),
                (long long)__builtin_popcountll(vu.label & vv.label & x),
                (long long)__builtin_popcountll(vu.label & vv.label & ~x),
                (long long)std::min(tu, tv),
                (long long)std::max(tu, tv)};
            if (!seen_edges.insert(key).second) continue;
            for (size_t ci = 0; ci < cos.size(); ++ci) {
                const auto& co = cos[ci];
                if (co.side == 2) {
                    int a_var = xi[var_key(ci, orbit_of[u], 1)];
                    int b_var = xi[var_key(ci, orbit_of[v], 1)];
                    if (a_var < 0 || b_var < 0) continue;
                    auto row_key = std::make_tuple(ci, std::min(a_var, b_var),
                                                   std::max(a_var, b_var));
                    if (!added_rows.insert(row_key).second) continue;
                    if (a_var == b_var)
                        lp.add_row({{a_var, 2}, {t_var[ci], -1}}, Sense::LE, 0);
                    else
                        lp.add_row({{a_var, 1}, {b_var, 1}, {t_var[ci], -1}}, Sense::LE, 0);
                    continue;
                }
                SubsetLabel side_mask = co.side == 0 ? x : (~x & ((p == 64) ? ~0ull
                                                                            : ((1ull << p) - 1)));
                long long n11 = __builtin_popcountll(vu.label & vv.label & side_mask);
                long long n10 = __builtin_popcountll(vu.label & ~vv.label & side_mask);
                long long n01 = __builtin_popcountll(~vu.label & vv.label & side_mask);
                long long n00 = side_size(co.side) - n11 - n10 - n01;
                auto consider = [&](int mu, int mv, long long cnt) {
                    if (cnt <= 0) return;
                    int a_var = xi[var_key(ci, orbit_of[u], mu)];
                    int b_var = xi[var_key(ci, orbit_of[v], mv)];
                    if (a_var < 0 || b_var < 0) return;
                    auto row_key = std::make_tuple(ci, std::min(a_var, b_var),
                                                   std::max(a_var, b_var));
                    if (!added_rows.insert(row_key).second) return;
                    if (a_var == b_var)
                        lp.add_row({{a_var, 2}, {t_var[ci], -1}}, Sense::LE, 0);
                    else
                        lp.add_row({{a_var, 1}, {b_var, 1}, {t_var[ci], -1}}, Sense::LE, 0);
                };
                consider(1, 1, n11);
                consider(1, 0, n10);
                consider(0, 1, n01);
                consider(0, 0, n00);
            }
        }
    }
    return out;
}

}  // namespace

ExtensionSolveResult solve_extension(const ExtensionInstance& inst,
                                     const ExtensionSolveOptions& opts) {
    ExtensionSolver solver(inst.p, inst.q, inst.d, opts);
    return solver.decide(inst.eps);
}

struct ExtensionSolver::Cache {
    std::optional<std::vector<Column>> pool;
    // the pool indexes classes positionally, and the class list's shape can
    // change with eps (zero-mass classes are omitted)
    std::vector<std::pair<bool, int>> pool_signature;
    bool pool_too_big = false;
    std::shared_ptr<const Graph> ray;
};

ExtensionSolver::ExtensionSolver(int p, int q, int d, ExtensionSolveOptions opts)
    : p_(p), q_(q), d_(d), opts_(opts), cache_(std::make_shared<Cache>()) {}

ExtensionSolveResult ExtensionSolver::decide(const Rational& eps_in) {
    Rational eps = canonical(eps_in);
    ExtensionInstance inst = build_extension_instance(p_, q_, d_, eps);
    if (cache_->ray)
        inst.ray = cache_->ray;
    else
        cache_->ray = inst.ray;
    Rational target = inst.total_mass();

    if (!opts_.force_full_lp) {
        if (opts_.allow_construction_path && try_construction(inst, eps))
            return {true, target, "construction"};
        if (opts_.allow_relaxation_path) {
            OrbitRelaxation relax = build_orbit_relaxation(inst);
            SimplexResult res = simplex_solve(relax.lp);
            if (res.status != SolveStatus::Optimal)
                throw std::logic_error("orbit relaxation must be feasible and bounded");
            if (res.objective > target) return {false, res.objective, "relaxation"};
        }
    }

    // full program
    std::vector<std::pair<bool, int>> signature;
    for (const auto& cls : inst.classes) signature.push_back({cls.with_special, cls.star_element});
    if (cache_->pool && cache_->pool_signature != signature) cache_->pool.reset();
    if (!cache_->pool && !cache_->pool_too_big) {
        try {
            cache_->pool = enumerate_columns(inst, opts_.column_budget);
            cache_->pool_signature = signature;
        } catch (const budget_exceeded_error&) {
            cache_->pool_too_big = true;
        }
    }
    Rational optimum = cache_->pool_too_big ? solve_colgen_lp(inst, opts_)
                                            : solve_full_lp(inst, *cache_->pool).optimum;
    if (optimum < target)
        throw std::logic_error("extension LP optimum below the total class mass");
    return {optimum == target, optimum, "full-lp"};
}

ThresholdBracket ExtensionSolver::threshold(const Rational& tol_in) {
    Rational tol = canonical(tol_in);
    if (tol <= 0) throw precondition_error("threshold: tol > 0 required");
    Rational hi = 1, lo = 0;
    while (true) {
        if (decide(hi).extendable) break;
        if (d_ % 4 == 3 || hi >= 8)
            throw budget_exceeded_error("no extendable upper bound found", 8);
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        if (decide(mid).extendable)
            hi = mid;
        else
            lo = mid;
    }
    return {lo, hi};
}

ThresholdBracket minimal_extension_epsilon(int p, int q, int d, const Rational& tol,
                                           const ExtensionSolveOptions& opts) {
    ExtensionSolver solver(p, q, d, opts);
    return solver.threshold(tol);
}

}  // namespace fracext
