#pragma once

#include "wvc/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

namespace wvc {

// Real root of x^3 = x^2 + 1; governs the node-count measure 1.4656^(k+l)
// used by the bench instrumentation.
inline constexpr double kBranchingRoot = 1.4655712319;

struct BranchStats {
    std::uint64_t nodes_expanded = 0;
    Weight initial_k = 0;
    std::size_t initial_l = 0;             // fractional-weight vertices
    std::size_t initial_l_below_one = 0;   // fractional weights < 1 only
};

// Decision with witness on YES. Tree solvers reuse this type; there
// nodes_expanded carries the number of DP cells computed.
struct DecisionResult {
    bool answer = false;
    std::optional<CoverSolution> witness;
    BranchStats stats;
};

inline std::size_t fractional_count(const WeightedGraph& g) {
    std::size_t l = 0;
    for (const Weight& w : g.weights)
        if (!is_integer(w)) ++l;
    return l;
}

inline std::size_t fractional_count_below_one(const WeightedGraph& g) {
    std::size_t l = 0;
    for (const Weight& w : g.weights)
        if (!is_integer(w) && w < 1) ++l;
    return l;
}

namespace detail {

// Min-weight cover of a path given as an ordered weight list; the first/last
// vertex can be forced into the cover (used by the cycle cases).
struct PathCover {
    Weight weight = 0;
    std::vector<std::size_t> picked;   // positions in the given order
};

inline PathCover cover_path(const std::vector<Weight>& w, bool force_first, bool force_last) {
    PathCover out;
    const std::size_t m = w.size();
    if (m == 0) return out;

    // dp over (position, in/out of cover); out at position i forces i-1 in
    std::vector<std::optional<Weight>> win(m), wout(m);
    win[0] = w[0];
    if (!force_first) wout[0] = Weight(0);
    for (std::size_t i = 1; i < m; ++i) {
        std::optional<Weight> best = wout[i - 1];
        if (win[i - 1] && (!best || *win[i - 1] < *best)) best = win[i - 1];
        if (best) win[i] = *best + w[i];
        wout[i] = win[i - 1];
    }

    bool state_in;
    if (force_last || !wout[m - 1])
        state_in = true;
    else if (!win[m - 1])
        state_in = false;
    else
        state_in = *win[m - 1] < *wout[m - 1];   // tie keeps the vertex out
    out.weight = state_in ? *win[m - 1] : *wout[m - 1];

    for (std::size_t i = m; i-- > 0;) {
        if (state_in) {
            out.picked.push_back(i);
            if (i == 0) break;
            // predecessor state: whichever realized win[i], out preferred on ties
            if (wout[i - 1] && *wout[i - 1] + w[i] == *win[i])
                state_in = false;
        } else {
            if (i == 0) break;
            state_in = true;   // out is only reachable from in
        }
    }
    std::reverse(out.picked.begin(), out.picked.end());
    return out;
}

}  // namespace detail

// Minimum-weight vertex cover when every degree is at most 2: the graph is a
// disjoint union of paths and cycles, each solved by the path dp (cycles by
// conditioning on the lowest vertex being in or out).
inline CoverSolution solve_degree_le2(const WeightedGraph& g) {
    validate(g);
    for (VertexId v = 0; v < g.n; ++v)
        if (g.degree(v) > 2)
            throw std::invalid_argument("vertex " + std::to_string(v) + " has degree > 2");

    std::vector<VertexId> picks;
    std::vector<char> seen(g.n, 0);
    for (VertexId start = 0; start < g.n; ++start) {
        if (seen[start]) continue;
        // collect the component
        std::vector<VertexId> comp{start};
        seen[start] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (VertexId u : g.neighbors(comp[head]))
                if (!seen[u]) {
                    seen[u] = 1;
                    comp.push_back(u);
                }
        if (comp.size() == 1) continue;   // isolated vertex, never picked

        std::sort(comp.begin(), comp.end());
        bool cycle = true;
        for (VertexId v : comp)
            if (g.degree(v) != 2) cycle = false;

        std::vector<VertexId> order;
        order.reserve(comp.size());
        if (cycle) {
            VertexId prev = comp[0];
            order.push_back(prev);
            VertexId cur = g.neighbors(prev)[0];
            while (cur != comp[0]) {
                order.push_back(cur);
                VertexId nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1]
                                                           : g.neighbors(cur)[0];
                prev = cur;
                cur = nxt;
            }
        } else {
            VertexId end = 0;
            for (VertexId v : comp)
                if (g.degree(v) <= 1) {
                    end = v;
                    break;
                }
            order.push_back(end);
            VertexId prev = end;
            VertexId cur = g.neighbors(end)[0];
            for (;;) {
                order.push_back(cur);
                if (g.degree(cur) == 1) break;
                VertexId nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1]
                                                           : g.neighbors(cur)[0];
                prev = cur;
                cur = nxt;
            }
        }

        std::vector<Weight> w;
        w.reserve(order.size());
        for (VertexId v : order) w.push_back(g.weights[v]);

        if (!cycle) {
            detail::PathCover pc = detail::cover_path(w, false, false);
            for (std::size_t i : pc.picked) picks.push_back(order[i]);
        } else {
            std::vector<Weight> rest(w.begin() + 1, w.end());
            detail::PathCover with_head = detail::cover_path(rest, false, false);
            detail::PathCover without_head = detail::cover_path(rest, true, true);
            if (w[0] + with_head.weight <= without_head.weight) {
                picks.push_back(order[0]);
                for (std::size_t i : with_head.picked) picks.push_back(order[i + 1]);
            } else {
                for (std::size_t i : without_head.picked) picks.push_back(order[i + 1]);
            }
        }
    }
    return make_cover_solution(g, std::move(picks));
}

namespace detail {

struct BranchSearch {
    const WeightedGraph& g;
    std::uint64_t nodes = 0;

    std::optional<std::vector<VertexId>> decide(std::vector<char> alive, Weight budget,
                                                std::vector<VertexId> chosen) {
        ++nodes;
        // isolated vertices never enter a cover; drop them before degree tests
        std::vector<std::size_t> deg(g.n, 0);
        for (VertexId v = 0; v < g.n; ++v) {
            if (!alive[v]) continue;
            for (VertexId u : g.neighbors(v))
                if (alive[u]) ++deg[v];
            if (deg[v] == 0) alive[v] = 0;
        }

        std::size_t max_deg = 0;
        VertexId pick = 0;
        for (VertexId v = 0; v < g.n; ++v)
            if (alive[v] && deg[v] > max_deg) {
                max_deg = deg[v];
                pick = v;
            }

        if (max_deg <= 2) {
            std::vector<VertexId> keep;
            for (VertexId v = 0; v < g.n; ++v)
                if (alive[v]) keep.push_back(v);
            InducedSubgraph sub = induced_subgraph(g, keep);
            CoverSolution rest = solve_degree_le2(sub.graph);
            if (rest.total_weight > budget) return std::nullopt;
            for (VertexId v : rest.vertices) chosen.push_back(sub.original_ids[v]);
            return chosen;
        }

        // branch: the cover holds either `pick` or all of its neighbors
        if (budget - g.weights[pick] >= 0) {
            std::vector<char> rest = alive;
            rest[pick] = 0;
            std::vector<VertexId> taken = chosen;
            taken.push_back(pick);
            auto r = decide(std::move(rest), budget - g.weights[pick], std::move(taken));
            if (r) return r;
        }

        Weight nbhd = 0;
        std::vector<VertexId> nbrs;
        for (VertexId u : g.neighbors(pick))
            if (alive[u]) {
                nbrs.push_back(u);
                nbhd += g.weights[u];
            }
        if (budget - nbhd >= 0) {
            std::vector<char> rest = alive;
            std::vector<VertexId> taken = chosen;
            for (VertexId u : nbrs) {
                rest[u] = 0;
                taken.push_back(u);
            }
            return decide(std::move(rest), budget - nbhd, std::move(taken));
        }
        return std::nullopt;
    }
};

}  // namespace detail

// Exact decision: does G have a vertex cover of weight <= k? Branches on the
// lowest-index maximum-degree vertex once the degree drops to <= 2 the rest is
// solved outright. Witness on YES.
inline DecisionResult branch_decide(const WeightedGraph& g, const Weight& k) {
    if (k < 0) throw std::invalid_argument("budget must be non-negative");
    validate(g);

    DecisionResult res;
    res.stats.initial_k = k;
    res.stats.initial_l = fractional_count(g);
    res.stats.initial_l_below_one = fractional_count_below_one(g);

    detail::BranchSearch search{g};
    auto found = search.decide(std::vector<char>(g.n, 1), k, {});
    res.stats.nodes_expanded = search.nodes;
    if (found) {
        res.answer = true;
        res.witness = make_cover_solution(g, std::move(*found));
    }
    return res;
}

// Selector for the budget-scaling heuristic: among ascending weights, pick the
// index i (1-based, restricted to weights >= 1) minimizing k/w_i + (i-1); the
// first i wins ties. When no weight reaches 1 the smallest weight is used and
// flagged.
struct ScalingChoice {
    std::size_t index = 0;        // 1-based into the ascending list
    Weight value = 0;
    bool below_one_fallback = false;
};

inline ScalingChoice best_scaling(const std::vector<Weight>& ascending, const Weight& k) {
    if (ascending.empty()) throw std::invalid_argument("empty weight list");
    if (!std::is_sorted(ascending.begin(), ascending.end()))
        throw std::invalid_argument("weights must be ascending");

    ScalingChoice best;
    for (std::size_t i = 1; i <= ascending.size(); ++i) {
        const Weight& w = ascending[i - 1];
        if (w < 1) continue;
        Weight value = k / w + Weight(i - 1);
        if (best.index == 0 || value < best.value) {
            best.index = i;
            best.value = std::move(value);
        }
    }
    if (best.index == 0) {
        best.index = 1;
        best.value = k / ascending[0];
        best.below_one_fallback = true;
    }
    return best;
}

}  // namespace wvc
