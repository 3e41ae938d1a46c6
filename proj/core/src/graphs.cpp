#include "fracext/graphs.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "fracext/errors.hpp"

namespace fracext {

namespace {

// label-lexicographic (element-list) order, then level, then ray
bool vertex_order(const Vertex& a, const Vertex& b) {
    if (a.label != b.label) {
        SubsetLabel x = a.label, y = b.label;
        while (x && y) {
            int ex = __builtin_ctzll(x), ey = __builtin_ctzll(y);
            if (ex != ey) return ex < ey;
            x &= x - 1;
            y &= y - 1;
        }
        return y != 0;  // shorter list first
    }
    if (a.level != b.level) return a.level < b.level;
    return a.ray < b.ray;
}

}  // namespace

bool Graph::adjacent(int u, int v) const {
    const auto& small = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(small.begin(), small.end(), other);
}

int Graph::find_vertex(SubsetLabel label, int level, int ray) const {
    Vertex key{0, label, level, ray};
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), key, vertex_order);
    if (it != vertices_.end() && it->label == label && it->level == level && it->ray == ray)
        return it->id;
    return -1;
}

Graph Graph::build(std::vector<Vertex> vertices, std::vector<std::pair<int, int>> edges,
                   std::vector<int> special, int /*label_ground_size*/) {
    Graph g;
    int n = (int)vertices.size();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return vertex_order(vertices[a], vertices[b]); });
    std::vector<int> new_id(n);
    for (int pos = 0; pos < n; ++pos) new_id[order[pos]] = pos;

    g.vertices_.resize(n);
    for (int i = 0; i < n; ++i) {
        g.vertices_[new_id[i]] = vertices[i];
        g.vertices_[new_id[i]].id = new_id[i];
    }
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u == v) throw precondition_error("self-loop in graph construction");
        g.adj_[new_id[u]].push_back(new_id[v]);
        g.adj_[new_id[v]].push_back(new_id[u]);
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        g.edge_count_ += (long long)nbrs.size();
    }
    g.edge_count_ /= 2;
    for (int s : special) g.special_.push_back(new_id[s]);
    std::sort(g.special_.begin(), g.special_.end());
    return g;
}

Graph kneser(int p, int q) {
    if (q < 1 || p < 2 * q)
        throw precondition_error("kneser: requires 1 <= q and p >= 2q");
    if (p > 64) throw precondition_error("kneser: p <= 64 required");
    auto labels = all_subsets(p, q);
    int n = (int)labels.size();
    std::vector<Vertex> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = {i, labels[i], 0, 0};
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (labels_disjoint(labels[i], labels[j])) edges.push_back({i, j});
    return Graph::build(std::move(verts), std::move(edges), {}, p);
}

Graph single_vertex() {
    return Graph::build({{0, 0, 0, 0}}, {}, {}, 0);
}

Graph path_graph(int n) {
    if (n < 1) throw precondition_error("path_graph: n >= 1");
    std::vector<Vertex> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = {i, 0, i, 0};
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph::build(std::move(verts), std::move(edges), {}, 0);
}

Graph complete_graph(int n) {
    if (n < 1) throw precondition_error("complete_graph: n >= 1");
    std::vector<Vertex> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = {i, (SubsetLabel)1ull << i, 0, 0};
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph::build(std::move(verts), std::move(edges), {}, n);
}

Graph extension_product(const Graph& g, const Graph& h) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw precondition_error("extension_product: factors must be nonempty");
    int ng = g.vertex_count(), nh = h.vertex_count();
    std::vector<Vertex> verts;
    verts.reserve((size_t)ng * nh);
    auto index = [&](int gu, int hv) { return gu * nh + hv; };
    for (int gu = 0; gu < ng; ++gu)
        for (int hv = 0; hv < nh; ++hv)
            verts.push_back({index(gu, hv), g.vertex(gu).label, h.vertex(hv).level,
                             h.vertex(hv).ray});
    std::vector<std::pair<int, int>> edges;
    for (int gu = 0; gu < ng; ++gu)
        for (int gv : g.neighbors(gu)) {
            if (gv < gu) continue;
            for (int hv = 0; hv < nh; ++hv) {
                edges.push_back({index(gu, hv), index(gv, hv)});
                for (int hw : h.neighbors(hv)) edges.push_back({index(gu, hv), index(gv, hw)});
            }
        }
    return Graph::build(std::move(verts), std::move(edges), {}, 0);
}

Graph build_ray(const RaySpec& spec) {
    if (spec.q < 1 || spec.p < 2 * spec.q) throw precondition_error("build_ray: p >= 2q required");
    if (spec.length < 1) throw precondition_error("build_ray: length >= 1 required");
    auto labels = all_subsets(spec.p, spec.q);
    int n = (int)labels.size();
    int levels = spec.length + 1;
    std::vector<Vertex> verts;
    verts.reserve((size_t)n * levels);
    auto index = [&](int li, int lev) { return li * levels + lev; };
    for (int i = 0; i < n; ++i)
        for (int lev = 0; lev < levels; ++lev) verts.push_back({index(i, lev), labels[i], lev, 0});
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!labels_disjoint(labels[i], labels[j])) continue;
            for (int lev = 0; lev < levels; ++lev) {
                edges.push_back({index(i, lev), index(j, lev)});
                if (lev + 1 < levels) {
                    edges.push_back({index(i, lev), index(j, lev + 1)});
                    edges.push_back({index(j, lev), index(i, lev + 1)});
                }
            }
        }
    int special = -1;
    for (int i = 0; i < n; ++i)
        if (labels[i] == spec.special_label) special = index(i, 0);
    if (special < 0) throw precondition_error("build_ray: special label is not a q-subset of [p]");
    return Graph::build(std::move(verts), std::move(edges), {special}, spec.p);
}

Graph build_universal(int p, int q, int d, int n) {
    if (d < 3) throw precondition_error("build_universal: d >= 3 required");
    if (n < 1) throw precondition_error("build_universal: n >= 1 required");
    if (q < 1 || p < 2 * q) throw precondition_error("build_universal: p >= 2q required");
    auto labels = all_subsets(p, q);
    int nl = (int)labels.size();
    int num_rays = n * nl;
    std::vector<Vertex> verts;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> special;

    auto add_kneser_edges = [&](const std::vector<int>& ids) {
        for (int i = 0; i < nl; ++i)
            for (int j = i + 1; j < nl; ++j)
                if (labels_disjoint(labels[i], labels[j])) edges.push_back({ids[i], ids[j]});
    };
    auto add_cross_edges = [&](const std::vector<int>& lower, const std::vector<int>& upper) {
        for (int i = 0; i < nl; ++i)
            for (int j = 0; j < nl; ++j)
                if (labels_disjoint(labels[i], labels[j])) edges.push_back({lower[i], upper[j]});
    };

    if (d % 2 == 0) {
        int len = d / 2;
        // one shared base at level len, ray 0
        std::vector<int> base(nl);
        for (int i = 0; i < nl; ++i) {
            base[i] = (int)verts.size();
            verts.push_back({base[i], labels[i], len, 0});
        }
        add_kneser_edges(base);
        for (int r = 1; r <= num_rays; ++r) {
            int x_index = (r - 1) % nl;  // label marked special in this ray
            std::vector<int> prev;
            for (int lev = 0; lev < len; ++lev) {
                std::vector<int> cur(nl);
                for (int i = 0; i < nl; ++i) {
                    cur[i] = (int)verts.size();
                    verts.push_back({cur[i], labels[i], lev, r});
                }
                add_kneser_edges(cur);
                if (lev > 0) add_cross_edges(prev, cur);
                if (lev == 0) special.push_back(cur[x_index]);
                prev = cur;
            }
            add_cross_edges(prev, base);
        }
    } else {
        int len = (d - 1) / 2;
        std::vector<std::vector<int>> bases(num_rays + 1);
        for (int r = 1; r <= num_rays; ++r) {
            int x_index = (r - 1) % nl;
            std::vector<int> prev;
            for (int lev = 0; lev <= len; ++lev) {
                std::vector<int> cur(nl);
                for (int i = 0; i < nl; ++i) {
                    cur[i] = (int)verts.size();
                    verts.push_back({cur[i], labels[i], lev, r});
                }
                add_kneser_edges(cur);
                if (lev > 0) add_cross_edges(prev, cur);
                if (lev == 0) special.push_back(cur[x_index]);
                prev = cur;
            }
            bases[r] = prev;
        }
        // clique pattern between the bases of distinct rays
        for (int r = 1; r <= num_rays; ++r)
            for (int r2 = r + 1; r2 <= num_rays; ++r2) add_cross_edges(bases[r], bases[r2]);
    }
    return Graph::build(std::move(verts), std::move(edges), std::move(special), p);
}

std::vector<std::vector<int>> distance_layers(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw precondition_error("distance_layers: bad vertex");
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue{v};
    dist[v] = 0;
    std::vector<std::vector<int>> layers;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if ((int)layers.size() <= dist[u]) layers.emplace_back();
        layers[dist[u]].push_back(u);
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return layers;
}

int graph_distance(const Graph& g, int u, int v) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue{u};
    dist[u] = 0;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (x == v) return dist[x];
        for (int w : g.neighbors(x))
            if (dist[w] < 0) {
                dist[w] = dist[x] + 1;
                queue.push_back(w);
            }
    }
    return -1;
}

std::optional<int> odd_girth(const Graph& g) {
    int best = -1;
    std::vector<int> dist(g.vertex_count());
    for (int root = 0; root < g.vertex_count(); ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> queue{root};
        dist[root] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (best >= 0 && 2 * dist[u] + 1 >= best) break;
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                } else if (dist[w] == dist[u]) {
                    int len = dist[u] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

bool is_independent(const Graph& g, const std::vector<int>& s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

int layer_independence_bound(int p, int q, int d) {
    int cap = d / 2 - 1;
    if (cap < 0) return 0;
    RaySpec spec{p, q, std::max(1, d / 2), first_q_elements(q)};
    Graph ray = build_ray(spec);
    auto layers = distance_layers(ray, ray.special().front());
    int best = 0;
    for (int i = 1; i <= cap && i < (int)layers.size(); ++i)
        if (is_independent(ray, layers[i])) best = i;
    return best;
}

std::string Graph::export_adjacency() const {
    std::ostringstream os;
    for (const auto& v : vertices_) {
        os << v.id << ' ' << v.label << ' ' << v.level << ' ' << v.ray << " :";
        for (int w : adj_[v.id]) os << ' ' << w;
        os << '\n';
    }
    return os.str();
}

}  // namespace fracext
