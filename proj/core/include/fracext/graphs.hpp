#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracext/combinatorics.hpp"

namespace fracext {

struct Vertex {
    int id = -1;
    SubsetLabel label = 0;
    int level = 0;  // path/ray coordinate; 0 for plain Kneser graphs
    int ray = 0;    // which ray; 0 for shared structures (e.g. a common base)
};

// Immutable after construction; all edges symmetric and irreflexive.
class Graph {
  public:
    int vertex_count() const { return (int)vertices_.size(); }
    long long edge_count() const { return edge_count_; }
    const Vertex& vertex(int id) const { return vertices_[id]; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<int>& neighbors(int id) const { return adj_[id]; }
    int degree(int id) const { return (int)adj_[id].size(); }
    bool adjacent(int u, int v) const;

    const std::vector<int>& special() const { return special_; }
    // Id of the vertex with the given (label, level, ray), or -1.
    int find_vertex(SubsetLabel label, int level, int ray) const;

    // Line-oriented text export: "<id> <label-bits> <level> <ray> : <neighbors>".
    std::string export_adjacency() const;

    // Construction helpers; vertices are re-indexed to the deterministic
    // (label-lex, level, ray) order and edges deduplicated.
    static Graph build(std::vector<Vertex> vertices, std::vector<std::pair<int, int>> edges,
                       std::vector<int> special, int label_ground_size);

  private:
    std::vector<Vertex> vertices_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> special_;
    long long edge_count_ = 0;
};

Graph kneser(int p, int q);
Graph single_vertex();
Graph path_graph(int n);
Graph complete_graph(int n);

// (u,v) ~ (u',v') iff u ~ u' in g and (v = v' or v ~ v' in h).  Labels come
// from g, (level, ray) from h.
Graph extension_product(const Graph& g, const Graph& h);

struct RaySpec {
    int p = 0, q = 0;
    int length = 1;  // P: path has P+1 vertices 0..P, base at level P
    SubsetLabel special_label = 0;
};

Graph build_ray(const RaySpec& spec);
Graph build_universal(int p, int q, int d, int n);

// layers[l] = ids at distance exactly l from v (v's component only).
std::vector<std::vector<int>> distance_layers(const Graph& g, int v);

int graph_distance(const Graph& g, int u, int v);

// Length of the shortest odd cycle; nullopt for bipartite graphs.
std::optional<int> odd_girth(const Graph& g);

bool is_independent(const Graph& g, const std::vector<int>& s);

// The paper's m(p,q,d): largest i <= floor(d/2)-1 such that the distance-i
// layer around the special vertex of R_{p,q,floor(d/2)} is independent.
int layer_independence_bound(int p, int q, int d);

}  // namespace fracext
