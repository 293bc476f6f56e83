#pragma once

#include "wvc/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace wvc {

// Vertices are dense indices in [0, n). All iteration is in ascending index
// order so every solver trace is reproducible.
using VertexId = std::uint32_t;

struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge normalized(Edge e) {
    if (e.u > e.v) std::swap(e.u, e.v);
    return e;
}

// -------------------- weighted graph --------------------

// Simple undirected graph with strictly positive rational vertex weights.
// Instances are immutable after construction; reductions build new graphs.
struct WeightedGraph {
    std::size_t n = 0;
    std::vector<Edge> edges;                  // normalized u <= v, sorted
    std::vector<Weight> weights;              // one per vertex
    std::vector<std::vector<VertexId>> adj;   // symmetric, ascending

    std::size_t degree(VertexId v) const { return adj[v].size(); }
    const std::vector<VertexId>& neighbors(VertexId v) const { return adj[v]; }
};

// Builds the adjacency view. Endpoints must be in range (anything else cannot
// be represented); semantic invariants are checked by validate() instead.
inline WeightedGraph make_weighted_graph(std::size_t n, std::vector<Edge> edges,
                                         std::vector<Weight> weights) {
    WeightedGraph g;
    g.n = n;
    for (auto& e : edges) {
        if (e.u >= n || e.v >= n)
            throw std::out_of_range("edge endpoint out of range");
        e = normalized(e);
    }
    std::sort(edges.begin(), edges.end());
    g.edges = std::move(edges);
    g.weights = std::move(weights);
    g.adj.assign(n, {});
    for (const Edge& e : g.edges) {
        g.adj[e.u].push_back(e.v);
        if (e.v != e.u) g.adj[e.v].push_back(e.u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

inline bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.n == b.n && a.edges == b.edges && a.weights == b.weights;
}

// Reports the first violated invariant: self-loop, duplicate edge, missing or
// non-positive weight.
inline void validate(const WeightedGraph& g) {
    if (g.weights.size() != g.n)
        throw std::invalid_argument("missing weight: graph has " + std::to_string(g.n) +
                                    " vertices but " + std::to_string(g.weights.size()) +
                                    " weights");
    for (VertexId v = 0; v < g.n; ++v) {
        if (g.weights[v] <= 0)
            throw std::invalid_argument("non-positive weight on vertex " + std::to_string(v));
    }
    std::vector<Edge> sorted;
    sorted.reserve(g.edges.size());
    for (Edge e : g.edges) {
        if (e.u >= g.n || e.v >= g.n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v)
            throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
        sorted.push_back(normalized(e));
    }
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1])
            throw std::invalid_argument("duplicate edge {" + std::to_string(sorted[i].u) +
                                        "," + std::to_string(sorted[i].v) + "}");
    }
}

inline Weight min_weight(const WeightedGraph& g) {
    if (g.n == 0) throw std::invalid_argument("min_weight of empty graph");
    Weight best = g.weights[0];
    for (VertexId v = 1; v < g.n; ++v)
        if (g.weights[v] < best) best = g.weights[v];
    return best;
}

inline Weight total_weight(const WeightedGraph& g, const std::vector<VertexId>& vertices) {
    Weight sum = 0;
    for (VertexId v : vertices) {
        if (v >= g.n) throw std::out_of_range("vertex id out of range");
        sum += g.weights[v];
    }
    return sum;
}

inline bool is_vertex_cover(const WeightedGraph& g, const std::vector<VertexId>& s) {
    std::vector<char> in(g.n, 0);
    for (VertexId v : s) {
        if (v >= g.n) throw std::out_of_range("vertex id out of range");
        in[v] = 1;
    }
    for (const Edge& e : g.edges)
        if (!in[e.u] && !in[e.v]) return false;
    return true;
}

// Multiplies every weight and the budget by the same positive factor; the
// decision answer of (G, k) is unchanged.
inline std::pair<WeightedGraph, Weight> scale_instance(const WeightedGraph& g, const Weight& k,
                                                       const Weight& factor) {
    if (factor <= 0) throw std::invalid_argument("scale factor must be positive");
    WeightedGraph scaled = g;
    for (auto& w : scaled.weights) w *= factor;
    return {std::move(scaled), k * factor};
}

// Induced subgraph on `keep` (ascending original ids), densely re-indexed.
struct InducedSubgraph {
    WeightedGraph graph;
    std::vector<VertexId> original_ids;   // new id i -> original_ids[i]
};

inline InducedSubgraph induced_subgraph(const WeightedGraph& g, const std::vector<VertexId>& keep) {
    InducedSubgraph out;
    out.original_ids = keep;
    std::vector<VertexId> new_id(g.n, static_cast<VertexId>(-1));
    std::vector<Weight> weights;
    weights.reserve(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        VertexId v = keep[i];
        if (v >= g.n) throw std::out_of_range("vertex id out of range");
        new_id[v] = static_cast<VertexId>(i);
        weights.push_back(g.weights[v]);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges)
        if (new_id[e.u] != static_cast<VertexId>(-1) && new_id[e.v] != static_cast<VertexId>(-1))
            edges.push_back({new_id[e.u], new_id[e.v]});
    out.graph = make_weighted_graph(keep.size(), std::move(edges), std::move(weights));
    return out;
}

// -------------------- red-blue tree --------------------

enum class Color : std::uint8_t { Red, Blue };

// Tree with an R/B color per vertex; weights are optional (empty when the
// instance is the unweighted count-budget variant).
struct RedBlueTree {
    std::size_t n = 0;
    std::vector<Edge> edges;
    std::vector<Color> colors;
    std::vector<Weight> weights;              // empty or one per vertex
    std::vector<std::vector<VertexId>> adj;

    bool weighted() const { return !weights.empty(); }
    std::size_t degree(VertexId v) const { return adj[v].size(); }
};

inline RedBlueTree make_red_blue_tree(std::size_t n, std::vector<Edge> edges,
                                      std::vector<Color> colors,
                                      std::vector<Weight> weights = {}) {
    RedBlueTree t;
    t.n = n;
    for (auto& e : edges) {
        if (e.u >= n || e.v >= n)
            throw std::out_of_range("edge endpoint out of range");
        e = normalized(e);
    }
    std::sort(edges.begin(), edges.end());
    t.edges = std::move(edges);
    t.colors = std::move(colors);
    t.weights = std::move(weights);
    t.adj.assign(n, {});
    for (const Edge& e : t.edges) {
        t.adj[e.u].push_back(e.v);
        if (e.v != e.u) t.adj[e.v].push_back(e.u);
    }
    for (auto& nb : t.adj) std::sort(nb.begin(), nb.end());
    return t;
}

inline bool operator==(const RedBlueTree& a, const RedBlueTree& b) {
    return a.n == b.n && a.edges == b.edges && a.colors == b.colors && a.weights == b.weights;
}

// Connected, acyclic, fully colored, and (when weighted) positive weights.
inline void validate(const RedBlueTree& t) {
    if (t.n == 0) throw std::invalid_argument("tree must have at least one vertex");
    if (t.colors.size() != t.n)
        throw std::invalid_argument("every vertex needs a color");
    if (!t.weights.empty() && t.weights.size() != t.n)
        throw std::invalid_argument("missing weight");
    for (const Weight& w : t.weights)
        if (w <= 0) throw std::invalid_argument("non-positive weight");
    if (t.edges.size() != t.n - 1)
        throw std::invalid_argument("not a tree: expected " + std::to_string(t.n - 1) +
                                    " edges, got " + std::to_string(t.edges.size()));
    for (const Edge& e : t.edges)
        if (e.u == e.v) throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
    // n-1 edges + connected => acyclic
    std::vector<char> seen(t.n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t visited = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId u : t.adj[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++visited;
                stack.push_back(u);
            }
        }
    }
    if (visited != t.n) throw std::invalid_argument("not a tree: disconnected");
}

inline bool is_vertex_cover(const RedBlueTree& t, const std::vector<VertexId>& s) {
    std::vector<char> in(t.n, 0);
    for (VertexId v : s) {
        if (v >= t.n) throw std::out_of_range("vertex id out of range");
        in[v] = 1;
    }
    for (const Edge& e : t.edges)
        if (!in[e.u] && !in[e.v]) return false;
    return true;
}

// -------------------- cover solutions --------------------

struct CoverSolution {
    std::vector<VertexId> vertices;            // ascending
    Weight total_weight = 0;
    std::optional<Weight> red_weight;          // red-blue instances only
    std::optional<std::size_t> red_count;
};

inline CoverSolution make_cover_solution(const WeightedGraph& g, std::vector<VertexId> vertices) {
    std::sort(vertices.begin(), vertices.end());
    CoverSolution s;
    s.total_weight = total_weight(g, vertices);
    s.vertices = std::move(vertices);
    return s;
}

// For unweighted trees the "weight" of a cover is its size.
inline CoverSolution make_cover_solution(const RedBlueTree& t, std::vector<VertexId> vertices) {
    std::sort(vertices.begin(), vertices.end());
    CoverSolution s;
    std::size_t reds = 0;
    Weight total = 0;
    Weight red_total = 0;
    for (VertexId v : vertices) {
        if (v >= t.n) throw std::out_of_range("vertex id out of range");
        Weight w = t.weighted() ? t.weights[v] : Weight(1);
        total += w;
        if (t.colors[v] == Color::Red) {
            ++reds;
            red_total += w;
        }
    }
    s.vertices = std::move(vertices);
    s.total_weight = std::move(total);
    s.red_count = reds;
    s.red_weight = std::move(red_total);
    return s;
}

}  // namespace wvc
