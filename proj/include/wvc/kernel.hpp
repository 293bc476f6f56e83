#pragma once

#include "wvc/graph.hpp"

#include <optional>
#include <utility>

namespace wvc {

// Outcome of a kernelization pass. `kernel` is densely re-indexed; entry i of
// `kernel_vertices` is its id in the original graph. `committed` holds
// original-id vertices forced into every cover; `removed_isolated` holds
// vertices dropped without commitment (degree-0 vertices here, LP-zero
// vertices in the LP kernel).
enum class KernelVariant { Reduced, No };

struct KernelOutcome {
    KernelVariant variant = KernelVariant::Reduced;
    WeightedGraph kernel;
    std::vector<VertexId> kernel_vertices;
    std::vector<VertexId> committed;
    std::vector<VertexId> removed_isolated;
    Weight remaining_budget = 0;

    bool is_no() const { return variant == KernelVariant::No; }
};

// Deletes all degree-0 vertices; the budget is untouched.
struct IsolatedRemoval {
    WeightedGraph graph;
    std::vector<VertexId> removed;
    std::vector<VertexId> kept;
};

inline IsolatedRemoval remove_isolated(const WeightedGraph& g) {
    IsolatedRemoval out;
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < g.n; ++v) {
        if (g.degree(v) == 0)
            out.removed.push_back(v);
        else
            keep.push_back(v);
    }
    InducedSubgraph sub = induced_subgraph(g, keep);
    out.graph = std::move(sub.graph);
    out.kept = std::move(keep);
    return out;
}

// One application of the heavy-neighborhood rule: if some vertex's
// neighborhood weight exceeds the budget, that vertex is in every affordable
// cover, so commit it. Picks the lowest-index qualifying vertex.
struct HeavyCommit {
    VertexId vertex;        // id in the input graph
    WeightedGraph graph;    // input minus that vertex, re-indexed
    Weight budget;          // k - w(vertex); may be negative, caller decides
};

inline std::optional<HeavyCommit> heavy_neighborhood_rule(const WeightedGraph& g, const Weight& k) {
    for (VertexId v = 0; v < g.n; ++v) {
        Weight nbhd = 0;
        for (VertexId u : g.neighbors(v)) nbhd += g.weights[u];
        if (nbhd > k) {
            std::vector<VertexId> keep;
            keep.reserve(g.n - 1);
            for (VertexId u = 0; u < g.n; ++u)
                if (u != v) keep.push_back(u);
            HeavyCommit hc{v, induced_subgraph(g, keep).graph, k - g.weights[v]};
            return hc;
        }
    }
    return std::nullopt;
}

// Exhaustive kernelization: strip isolated vertices, commit one heavy vertex,
// repeat. Certifies No when a commit overruns the budget or when the reduced
// graph keeps more than (k'/min(w'))^2 edges (min(w') over the reduced graph;
// an edgeless kernel passes vacuously).
inline KernelOutcome buss_kernelize(const WeightedGraph& g, const Weight& k) {
    if (k < 0) throw std::invalid_argument("budget must be non-negative");
    validate(g);

    KernelOutcome out;
    out.remaining_budget = k;
    WeightedGraph cur = g;
    std::vector<VertexId> to_orig(g.n);
    for (VertexId v = 0; v < g.n; ++v) to_orig[v] = v;

    for (;;) {
        IsolatedRemoval iso = remove_isolated(cur);
        for (VertexId v : iso.removed) out.removed_isolated.push_back(to_orig[v]);
        std::vector<VertexId> kept_orig;
        kept_orig.reserve(iso.kept.size());
        for (VertexId v : iso.kept) kept_orig.push_back(to_orig[v]);
        to_orig = std::move(kept_orig);
        cur = std::move(iso.graph);

        auto hit = heavy_neighborhood_rule(cur, out.remaining_budget);
        if (!hit) break;
        out.committed.push_back(to_orig[hit->vertex]);
        to_orig.erase(to_orig.begin() + hit->vertex);
        cur = std::move(hit->graph);
        out.remaining_budget = std::move(hit->budget);
        if (out.remaining_budget < 0) {
            out.variant = KernelVariant::No;
            return out;
        }
    }

    if (!cur.edges.empty()) {
        // |E| <= (k'/min(w'))^2, compared as |E| * min^2 <= k'^2 to stay exact
        Weight mw = min_weight(cur);
        if (Weight(cur.edges.size()) * mw * mw > out.remaining_budget * out.remaining_budget) {
            out.variant = KernelVariant::No;
            return out;
        }
    }

    out.kernel = std::move(cur);
    out.kernel_vertices = std::move(to_orig);
    return out;
}

}  // namespace wvc
