#pragma once

#include "wvc/graph.hpp"
#include "wvc/kernel.hpp"
#include "wvc/maxflow.hpp"

#include <algorithm>
#include <vector>

namespace wvc {

// Optimal solution of the vertex cover LP relaxation
//   minimize sum w(v) x_v   s.t.  x_u + x_v >= 1 on edges,  0 <= x_v <= 1.
// Every value is exactly 0, 1/2 or 1, and the objective is optimal over all
// fractional solutions, not just half-integral ones.
struct HalfIntegralSolution {
    std::vector<Rational> values;
    Weight objective = 0;
};

// Thresholding of an LP solution at 1/2 (exact comparisons).
struct NttPartition {
    std::vector<VertexId> v0;       // x < 1/2
    std::vector<VertexId> v1;       // x > 1/2
    std::vector<VertexId> v_half;   // x = 1/2
};

// Solves the LP combinatorially: double the graph into a bipartite instance
// (u_left ~ v_right and v_left ~ u_right per edge), find a minimum-weight
// vertex cover there as a min cut, and set x_v to half the number of chosen
// copies of v. Weights are scaled by the lcm of their denominators so all
// capacities are integers; the result is exact.
//
// The LP can have several optima; this routine picks one deterministically
// (source side of the residual graph after a fixed augmentation order), but
// another correct solver may return a different optimal value vector, so
// downstream checks should rely on the objective and the threshold
// properties rather than on specific per-vertex values.
inline HalfIntegralSolution solve_vc_lp(const WeightedGraph& g) {
    validate(g);
    HalfIntegralSolution sol;
    sol.values.assign(g.n, Rational(0));
    if (g.n == 0) return sol;

    BigInt scale = 1;
    for (const Weight& w : g.weights) scale = lcm(scale, rat_den(w));
    std::vector<BigInt> cap(g.n);
    BigInt inf = 1;
    for (VertexId v = 0; v < g.n; ++v) {
        cap[v] = rat_num(g.weights[v]) * (scale / rat_den(g.weights[v]));
        inf += cap[v];
    }

    // node layout: 0 = source, 1 = sink, 2+v = v_left, 2+n+v = v_right
    const std::size_t source = 0, sink = 1;
    auto left = [](VertexId v) { return std::size_t(2) + v; };
    auto right = [&](VertexId v) { return std::size_t(2) + g.n + v; };

    detail::MaxFlow flow(2 + 2 * g.n);
    for (VertexId v = 0; v < g.n; ++v) {
        flow.add_edge(source, left(v), cap[v]);
        flow.add_edge(right(v), sink, cap[v]);
    }
    for (const Edge& e : g.edges) {
        flow.add_edge(left(e.u), right(e.v), inf);
        flow.add_edge(left(e.v), right(e.u), inf);
    }
    flow.run(source, sink);
    std::vector<char> reach = flow.source_side(source);

    // Cut edges give the bipartite cover: left copies cut off from the source,
    // right copies still reachable.
    for (VertexId v = 0; v < g.n; ++v) {
        int halves = (reach[left(v)] ? 0 : 1) + (reach[right(v)] ? 1 : 0);
        sol.values[v] = Rational(halves, 2);
        sol.objective += g.weights[v] * sol.values[v];
    }
    return sol;
}

inline NttPartition partition(const HalfIntegralSolution& sol) {
    NttPartition p;
    const Rational half(1, 2);
    for (VertexId v = 0; v < sol.values.size(); ++v) {
        if (sol.values[v] < half)
            p.v0.push_back(v);
        else if (sol.values[v] > half)
            p.v1.push_back(v);
        else
            p.v_half.push_back(v);
    }
    return p;
}

// LP-based kernel: commit the x=1 vertices, drop the x=0 vertices, keep the
// induced subgraph on the half-valued ones. The LP objective doubles as a No
// certificate since it lower-bounds the integral optimum.
inline KernelOutcome ntt_kernelize(const WeightedGraph& g, const Weight& k) {
    if (k < 0) throw std::invalid_argument("budget must be non-negative");
    HalfIntegralSolution sol = solve_vc_lp(g);
    KernelOutcome out;
    out.remaining_budget = k;
    if (sol.objective > k) {
        out.variant = KernelVariant::No;
        return out;
    }
    NttPartition p = partition(sol);
    out.committed = p.v1;
    for (VertexId v : p.v1) out.remaining_budget -= g.weights[v];
    out.removed_isolated = p.v0;
    if (out.remaining_budget < 0) {
        out.variant = KernelVariant::No;
        return out;
    }
    InducedSubgraph sub = induced_subgraph(g, p.v_half);
    out.kernel = std::move(sub.graph);
    out.kernel_vertices = std::move(sub.original_ids);
    return out;
}

// Rounds a fresh LP solution up: S = V_1/2 union V_1 is a vertex cover of
// weight at most twice the optimum.
inline CoverSolution two_approx(const WeightedGraph& g) {
    NttPartition p = partition(solve_vc_lp(g));
    std::vector<VertexId> s;
    s.reserve(p.v1.size() + p.v_half.size());
    std::merge(p.v1.begin(), p.v1.end(), p.v_half.begin(), p.v_half.end(), std::back_inserter(s));
    return make_cover_solution(g, std::move(s));
}

// Diagnostic: the largest d such that the d cheapest weights sum to <= k.
inline std::size_t max_vertices_within_budget(const WeightedGraph& g, const Weight& k) {
    std::vector<Weight> ws = g.weights;
    std::sort(ws.begin(), ws.end());
    Weight sum = 0;
    std::size_t d = 0;
    for (const Weight& w : ws) {
        sum += w;
        if (sum > k) break;
        ++d;
    }
    return d;
}

}  // namespace wvc
