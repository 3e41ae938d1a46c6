#include "fracext/coloring.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

#include "fracext/errors.hpp"

namespace fracext {

namespace {

int dprime(int d) { return d / 4; }

Rational power(const Rational& base, int e) {
    Rational out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

// sum_{j=lo}^{hi} (k-1)^{exp(j)} with exp(j) = 2j + off
Rational geom_sum(const Rational& k, int lo, int hi, int off) {
    Rational out = 0;
    for (int j = lo; j <= hi; ++j) out += power(k - 1, 2 * j + off);
    return out;
}

std::string bound_condition(CaseTag tag) {
    switch (tag) {
        case CaseTag::D0: return "d0-bound";
        case CaseTag::D1: return "d1-bound";
        case CaseTag::D2: return "d2-bound";
        case CaseTag::D3: return "d3-bound";
        case CaseTag::D6_HIGH: return "d6-high-bound";
        case CaseTag::D7_HIGH: return "d7-high-bound";
    }
    return "?";
}

}  // namespace

CaseTag case_from_string(const std::string& name) {
    if (name == "D0") return CaseTag::D0;
    if (name == "D1") return CaseTag::D1;
    if (name == "D2") return CaseTag::D2;
    if (name == "D3") return CaseTag::D3;
    if (name == "D6_HIGH") return CaseTag::D6_HIGH;
    if (name == "D7_HIGH") return CaseTag::D7_HIGH;
    throw precondition_error("unknown case tag: " + name);
}

std::string case_to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::D0: return "D0";
        case CaseTag::D1: return "D1";
        case CaseTag::D2: return "D2";
        case CaseTag::D3: return "D3";
        case CaseTag::D6_HIGH: return "D6_HIGH";
        case CaseTag::D7_HIGH: return "D7_HIGH";
    }
    return "?";
}

bool applicability(CaseTag tag, const Rational& k_in, int d) {
    Rational k = canonical(k_in);
    int dp = dprime(d);
    switch (tag) {
        case CaseTag::D0:
            return d >= 4 && d % 4 == 0 && k >= 2 && k < 2 + Rational(1, 2 * dp - 1);
        case CaseTag::D1:
            return d >= 5 && d % 4 == 1 && k >= 2 && k < 2 + Rational(1, 2 * dp - 1);
        case CaseTag::D2:
            return d >= 6 && d % 4 == 2 && k >= 2 && k < 2 + Rational(1, 2 * dp);
        case CaseTag::D3:
            return d >= 7 && d % 4 == 3 && k >= 2 && k < 2 + Rational(1, 2 * dp);
        case CaseTag::D6_HIGH:
            return d == 6 && (k == 2 || (k >= Rational(5, 2) && k < 3));
        case CaseTag::D7_HIGH:
            return d == 7 && k > 0 && k < 3;
    }
    return false;
}

AlgebraicValue minimal_epsilon(CaseTag tag, const Rational& k, int d) {
    if (!applicability(tag, k, d))
        throw precondition_error("case " + case_to_string(tag) + " inapplicable at k=" +
                                 to_string(k) + ", d=" + std::to_string(d));
    return case_threshold_formula(tag, k, d);
}

AlgebraicValue case_threshold_formula(CaseTag tag, const Rational& k_in, int d) {
    Rational k = canonical(k_in);
    int dp = dprime(d);
    switch (tag) {
        case CaseTag::D0: {
            // eps*S2 + eps*(k-1+eps)/(k+eps) = 1/(k+eps), S2 = sum (k-1)^{2j+2}
            Rational s2 = geom_sum(k, 0, dp - 2, 2);
            return AlgebraicValue::quadratic_root(s2 + 1, s2 * k + k - 1, -1, true);
        }
        case CaseTag::D1:
            return AlgebraicValue(1 / (k * geom_sum(k, 0, dp - 1, 0)));
        case CaseTag::D2: {
            Rational s1 = geom_sum(k, 0, dp - 1, 1);
            return AlgebraicValue::quadratic_root(s1, s1 * k, -1, true);
        }
        case CaseTag::D3:
            return AlgebraicValue(1 / (1 + k * geom_sum(k, 0, dp - 1, 1)));
        case CaseTag::D6_HIGH:
            return AlgebraicValue::quadratic_root(1, k, -1, true);
        case CaseTag::D7_HIGH:
            return AlgebraicValue(1 / (k + 1));
    }
    throw precondition_error("unreachable");
}

namespace {

// Shared state for the four staged cases (D0..D3).
struct StagedBuilder {
    CaseTag tag;
    int p, q, d, dp;     // dp = floor(d/4)
    int ray_len;         // P
    Rational k, eps;
    Rational eps_stage;  // stage masses scale with this; min(eps, capacity)
    const IntervalSet& c_i;
    const PseudoRandomPartition& part;

    // f[a][lvl] for lvl in 1..P; tails indexed by layer 1..P
    std::vector<std::vector<IntervalSet>> f;
    std::vector<IntervalSet> tail;

    StagedBuilder(CaseTag tag, int p, int q, int d, Rational eps_in, const IntervalSet& c_i,
                  const PseudoRandomPartition& part)
        : tag(tag), p(p), q(q), d(d), dp(dprime(d)), c_i(c_i), part(part) {
        k = rat(p, q);
        eps = std::move(eps_in);
        ray_len = (d % 2 == 0) ? d / 2 : (d - 1) / 2;
        compute_stage_scale();
        build();
    }

    bool even_case() const { return tag == CaseTag::D0 || tag == CaseTag::D2; }

    const IntervalSet& palette(int a) const {
        return even_case() ? part.f_e[a] : part.f_o[a];
    }

    // Largest stage scale the pools can support at this eps; capping keeps
    // the construction monotone in eps (larger eps never hurts).
    void compute_stage_scale() {
        Rational unit = k / p;  // stage masses are eps_stage * unit * (k-1)^j
        Rational g_coef, h_coef, g_fixed = 0, h_fixed = 0, g_pool, h_pool;
        Rational in_cap = even_case() ? Rational(1) / (p + q * eps) : Rational(1, p);
        Rational pal = even_case() ? Rational(1, q) : (k + eps) / p;
        switch (tag) {
            case CaseTag::D0:
                g_coef = unit * geom_sum(k, 0, dp - 2, 1);
                h_coef = unit * geom_sum(k, 0, dp - 2, 0);
                break;
            case CaseTag::D2:
                g_coef = unit * geom_sum(k, 0, dp - 1, 0);
                h_coef = unit * geom_sum(k, 0, dp - 2, 1);
                break;
            case CaseTag::D1:
                g_coef = unit * geom_sum(k, 0, dp - 2, 1);
                g_fixed = eps / p;
                h_coef = unit * geom_sum(k, 0, dp - 2, 0);
                break;
            case CaseTag::D3:
                g_coef = unit * geom_sum(k, 0, dp - 1, 0);
                h_coef = unit * geom_sum(k, 0, dp - 2, 1);
                h_fixed = eps / p;
                break;
            default:
                throw precondition_error("staged builder: bad case");
        }
        g_pool = pal - in_cap;  // palette part outside C_i
        h_pool = in_cap;
        if (g_fixed > g_pool)
            throw deficit_error("stage pool outside C_i cannot supply the fixed part",
                                bound_condition(tag));
        if (h_fixed > h_pool)
            throw deficit_error("stage pool inside C_i cannot supply the fixed part (eps > 1)",
                                bound_condition(tag));
        eps_stage = eps;
        if (g_coef > 0) eps_stage = std::min(eps_stage, Rational((g_pool - g_fixed) / g_coef));
        if (h_coef > 0) eps_stage = std::min(eps_stage, Rational((h_pool - h_fixed) / h_coef));
    }

    void build() {
        Rational unit = eps_stage * k / p;
        int top = ray_len;
        // stage index ranges: g_j and h_j for j in [lo_g..hi_g] etc.
        // D0: g,h for 1..dp-1.  D1: g for 1..dp (g_dp fixed), h for 1..dp-1.
        // D2: h for 1..dp-1, g for 1..dp.  D3: h for 1..dp (h_dp fixed), g for 1..dp.
        int g_hi = (tag == CaseTag::D0) ? dp - 1 : dp;
        int h_hi = (tag == CaseTag::D3) ? dp : dp - 1;

        std::vector<std::vector<IntervalSet>> g(g_hi + 1), h(h_hi + 1);
        std::vector<IntervalSet> g_pool(p), h_pool(p);
        for (int a = 0; a < p; ++a) {
            g_pool[a] = subtract(palette(a), c_i);
            h_pool[a] = intersect(palette(a), c_i);
        }
        auto g_mass = [&](int j) -> Rational {
            if ((tag == CaseTag::D1 && j == dp)) return eps / p;
            if (tag == CaseTag::D0 || tag == CaseTag::D1)
                return unit * power(k - 1, 2 * (dp - j) - 1);
            return unit * power(k - 1, 2 * (dp - j));
        };
        auto h_mass = [&](int j) -> Rational {
            if (tag == CaseTag::D3 && j == dp) return eps / p;
            if (tag == CaseTag::D0 || tag == CaseTag::D1)
                return unit * power(k - 1, 2 * (dp - j) - 2);
            return unit * power(k - 1, 2 * (dp - j) - 1);
        };
        for (int j = g_hi; j >= 1; --j) {
            g[j].resize(p);
            for (int a = 0; a < p; ++a) {
                g[j][a] = carve(g_pool[a], g_mass(j));
                g_pool[a] = subtract(g_pool[a], g[j][a]);
            }
        }
        for (int j = h_hi; j >= 1; --j) {
            h[j].resize(p);
            for (int a = 0; a < p; ++a) {
                h[j][a] = carve(h_pool[a], h_mass(j));
                h_pool[a] = subtract(h_pool[a], h[j][a]);
            }
        }

        // level chains
        f.assign(p, std::vector<IntervalSet>(top + 1));
        for (int a = 0; a < p; ++a) {
            IntervalSet cur = palette(a);
            if (tag == CaseTag::D1) cur = subtract(cur, g[dp][a]);
            if (tag == CaseTag::D3) cur = subtract(cur, h[dp][a]);
            f[a][top] = cur;
            for (int lvl = top - 1; lvl >= 2; --lvl) {
                if (lvl % 2 == 1) {
                    int j = lvl / 2;  // f_{2j+1} = f_{2j+2} \ h_j
                    cur = subtract(cur, h[j][a]);
                } else {
                    int j = lvl / 2;  // f_{2j} = f_{2j+1} \ g_j
                    cur = subtract(cur, g[j][a]);
                }
                f[a][lvl] = cur;
            }
            f[a][1] = subtract(cur, c_i);
        }

        // shared tails per layer
        std::vector<IntervalSet> g_union(g_hi + 1), h_union(h_hi + 1);
        for (int j = 1; j <= g_hi; ++j)
            for (int a = 0; a < p; ++a) g_union[j] = unite(g_union[j], g[j][a]);
        for (int j = 1; j <= h_hi; ++j)
            for (int a = 0; a < p; ++a) h_union[j] = unite(h_union[j], h[j][a]);

        tail.assign(top + 1, IntervalSet());
        for (int l = 1; l <= top; ++l) {
            IntervalSet t;
            if (l % 2 == 0) {
                for (int j = l / 2; j <= h_hi; ++j) t = unite(t, h_union[j]);
                if (tag == CaseTag::D2) t = unite(t, part.y);
            } else {
                for (int j = (l + 1) / 2; j <= g_hi; ++j) t = unite(t, g_union[j]);
                if (tag == CaseTag::D0) {
                    if (l == 1)
                        t = unite(t, subtract(part.y, c_i));
                    else
                        t = unite(t, part.y);
                }
            }
            tail[l] = t;
        }
    }

    IntervalSet color(SubsetLabel label, int layer) const {
        IntervalSet out = tail[layer];
        for (int e : label_elements(label)) out = unite(out, f[e - 1][layer]);
        return out;
    }
};

// D6_HIGH / D7_HIGH: short-ray constructions; g/h indexed by elements of X.
struct ShortRayBuilder {
    CaseTag tag;
    int p, q;
    Rational k, eps;
    SubsetLabel x;
    const IntervalSet& c_i;
    const PseudoRandomPartition& part;

    std::map<int, IntervalSet> g1, g2, h;  // keyed by element
    IntervalSet g1_x, g2_x, g_x;           // unions over X

    ShortRayBuilder(CaseTag tag, int p, int q, Rational eps_in, SubsetLabel x,
                    const IntervalSet& c_i, const PseudoRandomPartition& part)
        : tag(tag), p(p), q(q), eps(std::move(eps_in)), x(x), c_i(c_i), part(part) {
        k = rat(p, q);
        if (tag == CaseTag::D6_HIGH)
            build_d6();
        else
            build_d7();
    }

    void build_d6() {
        Rational share = eps / (p + q * eps);
        for (int e : label_elements(x)) {
            g2[e] = carve(subtract(part.f_e[e - 1], c_i), share);
            g_x = unite(g_x, g2[e]);
        }
        auto parts = equipartition(intersect(part.y, c_i), q);
        auto elems = label_elements(x);
        for (int i = 0; i < q; ++i) h[elems[i]] = parts[i];
    }

    void build_d7() {
        if (eps > 1)
            throw deficit_error("d7 construction requires eps <= 1", bound_condition(tag));
        Rational share = eps / p;
        IntervalSet g2_rest;
        for (int e = 1; e <= p; ++e) {
            bool in_x = (x >> (e - 1)) & 1;
            IntervalSet pool = in_x ? subtract(part.f_o[e - 1], c_i)
                                    : intersect(part.f_o[e - 1], c_i);
            g2[e] = carve(pool, share);
            if (in_x)
                g2_x = unite(g2_x, g2[e]);
            else
                g2_rest = unite(g2_rest, g2[e]);
        }
        Rational g1_share = share * (k - 1);
        for (int e : label_elements(x)) {
            g1[e] = carve(subtract(subtract(part.f_o[e - 1], c_i), g2[e]), g1_share);
            g1_x = unite(g1_x, g1[e]);
        }
        auto parts = equipartition(g2_rest, q);
        auto elems = label_elements(x);
        for (int i = 0; i < q; ++i) h[elems[i]] = parts[i];
    }

    IntervalSet union_over(const std::map<int, IntervalSet>& fn, SubsetLabel s) const {
        IntervalSet out;
        for (int e : label_elements(s))
            if (auto it = fn.find(e); it != fn.end()) out = unite(out, it->second);
        return out;
    }

    IntervalSet color(SubsetLabel label, int layer) const {
        SubsetLabel meet = label & x;
        if (tag == CaseTag::D6_HIGH) {
            IntervalSet fe = part.f_e_union(label);
            if (layer >= 3) return fe;
            if (layer == 2) return unite(subtract(fe, union_over(g2, meet)), union_over(h, meet));
            return unite(unite(subtract(fe, c_i), subtract(part.y, c_i)), g_x);
        }
        IntervalSet base = subtract(part.f_o_union(label), union_over(g2, label));
        if (layer >= 3) return base;
        if (layer == 2)
            return unite(subtract(base, union_over(g1, meet)), union_over(h, meet));
        return unite(unite(subtract(part.f_o_union(label), c_i), g1_x), g2_x);
    }
};

int expected_ray_length(int d) { return d % 2 == 0 ? d / 2 : (d - 1) / 2; }

}  // namespace

FractionalColoring color_ray(CaseTag tag, const Graph& ray, int p, int q, int d,
                             const Rational& eps_in, const IntervalSet& c_i,
                             const PseudoRandomPartition& part) {
    Rational eps = canonical(eps_in);
    Rational k = rat(p, q);
    if (!applicability(tag, k, d))
        throw precondition_error("case " + case_to_string(tag) + " inapplicable at k=" +
                                 to_string(k) + ", d=" + std::to_string(d));
    if (eps <= 0) throw precondition_error("eps must be positive");
    if (c_i.measure() != 1) throw precondition_error("precolor set must have measure one");
    if (ray.special().size() != 1) throw precondition_error("ray must have one special vertex");
    int special = ray.special().front();
    SubsetLabel x = ray.vertex(special).label;
    int len = expected_ray_length(d);

    // layer = min(distance from special, ray length); unreachable -> top
    std::vector<int> layer(ray.vertex_count(), len);
    auto layers = distance_layers(ray, special);
    for (int l = 0; l < (int)layers.size(); ++l)
        for (int v : layers[l]) layer[v] = std::min(l, len);

    FractionalColoring out;
    out.span = k + eps;
    out.colors.resize(ray.vertex_count());

    auto finalize = [&](auto&& color_fn) {
        for (int v = 0; v < ray.vertex_count(); ++v) {
            if (v == special) {
                out.colors[v] = c_i;
                continue;
            }
            out.colors[v] = color_fn(ray.vertex(v).label, layer[v]);
            if (out.colors[v].measure() < 1)
                throw deficit_error(
                    "vertex " + std::to_string(v) + " at distance " +
                        std::to_string(layer[v]) + " received measure " +
                        to_string(out.colors[v].measure()) +
                        " < 1; eps is below the case threshold",
                    bound_condition(tag));
        }
    };

    if (tag == CaseTag::D6_HIGH || tag == CaseTag::D7_HIGH) {
        ShortRayBuilder builder(tag, p, q, eps, x, c_i, part);
        finalize([&](SubsetLabel label, int l) { return builder.color(label, l); });
    } else {
        StagedBuilder builder(tag, p, q, d, eps, c_i, part);
        finalize([&](SubsetLabel label, int l) { return builder.color(label, l); });
    }
    return out;
}

FractionalColoring extend_universal(CaseTag tag, const Graph& universal, int p, int q, int d,
                                    int n, const Rational& eps_in, const Precoloring& pre) {
    Rational eps = canonical(eps_in);
    Rational k = rat(p, q);
    long long num_rays = (long long)n * binomial_ll(p, q);
    if ((long long)pre.sets.size() != num_rays)
        throw precondition_error("precoloring must supply one set per special vertex (" +
                                 std::to_string(num_rays) + ")");
    PseudoRandomPartition part = build_pseudorandom(pre, p, q, eps);

    FractionalColoring out;
    out.span = k + eps;
    out.colors.resize(universal.vertex_count());
    std::vector<char> assigned(universal.vertex_count(), 0);

    int len = expected_ray_length(d);
    bool even = d % 2 == 0;

    // ray id r (1-based) -> special vertex
    std::vector<int> ray_special(num_rays + 1, -1);
    for (int s : universal.special()) ray_special[universal.vertex(s).ray] = s;

    for (int r = 1; r <= num_rays; ++r) {
        SubsetLabel x = universal.vertex(ray_special[r]).label;
        Graph ray = build_ray({p, q, len, x});
        FractionalColoring rc =
            color_ray(tag, ray, p, q, d, eps, pre.sets[r - 1], part);
        for (int v = 0; v < ray.vertex_count(); ++v) {
            const Vertex& rv = ray.vertex(v);
            int target = (rv.level == len && even)
                             ? universal.find_vertex(rv.label, len, 0)
                             : universal.find_vertex(rv.label, rv.level, r);
            if (target < 0) throw precondition_error("universal graph does not match (p,q,d,n)");
            if (assigned[target] && !(out.colors[target] == rc.colors[v]))
                throw precondition_error("rays disagree on a shared vertex");
            out.colors[target] = rc.colors[v];
            assigned[target] = 1;
        }
    }
    return out;
}

ColoringReport verify_coloring(const Graph& g, const FractionalColoring& coloring,
                               const std::vector<std::pair<int, IntervalSet>>& precolored,
                               bool strict) {
    ColoringReport report;
    IntervalSet span_set(0, coloring.span);
    for (int v = 0; v < g.vertex_count(); ++v) {
        const IntervalSet& c = coloring.colors[v];
        if (!c.subset_of(span_set))
            report.violations.push_back(
                {"span", v, -1, "color set escapes [0," + to_string(coloring.span) + ")"});
        Rational m = c.measure();
        if (m < 1 || (strict && m != 1))
            report.violations.push_back({"measure", v, -1, "measure " + to_string(m)});
    }
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            if (!coloring.colors[u].disjoint_with(coloring.colors[v])) {
                IntervalSet overlap = intersect(coloring.colors[u], coloring.colors[v]);
                report.violations.push_back(
                    {"overlap", u, v, "shared mass " + overlap.to_text()});
            }
        }
    for (const auto& [v, want] : precolored)
        if (!(coloring.colors[v] == want))
            report.violations.push_back({"precolor", v, -1, "assigned set differs"});
    return report;
}

std::string ColoringReport::summary() const {
    if (violations.empty()) return "ok";
    std::string out = std::to_string(violations.size()) + " violation(s):";
    for (size_t i = 0; i < violations.size() && i < 8; ++i) {
        const auto& viol = violations[i];
        out += "\n  [" + viol.kind + "] vertex " + std::to_string(viol.u);
        if (viol.v >= 0) out += "~" + std::to_string(viol.v);
        out += ": " + viol.detail;
    }
    return out;
}

FractionalColoring normalize_to_unit(const FractionalColoring& coloring) {
    FractionalColoring out;
    out.span = coloring.span;
    out.colors.reserve(coloring.colors.size());
    for (const auto& c : coloring.colors) out.colors.push_back(carve(c, 1));
    return out;
}

std::string coloring_to_json(const FractionalColoring& coloring, int p, int q, int d, int n,
                             const Rational& eps, CaseTag tag) {
    nlohmann::json j;
    j["meta"] = {{"p", p},
                 {"q", q},
                 {"d", d},
                 {"n", n},
                 {"eps", to_string(eps)},
                 {"case", case_to_string(tag)},
                 {"span", to_string(eps + rat(p, q))}};
    nlohmann::json colors = nlohmann::json::object();
    for (size_t v = 0; v < coloring.colors.size(); ++v)
        colors[std::to_string(v)] = coloring.colors[v].to_text();
    j["colors"] = std::move(colors);
    return j.dump();
}

}  // namespace fracext
