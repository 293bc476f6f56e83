#pragma once

#include "wvc/graph.hpp"
#include "wvc/redblue.hpp"

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

namespace wvc {

// Ground-truth solvers by exhaustive enumeration. Deliberately dumb: subsets
// in ascending binary order, every optimum retained. Size guards keep runaway
// enumerations out; WVC_ORACLE_CAP can lower (never raise) them for CI.
namespace detail {

inline std::size_t oracle_cap(std::size_t default_cap) {
    const char* env = std::getenv("WVC_ORACLE_CAP");
    if (!env) return default_cap;
    std::size_t parsed = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::string_view(env).size(), parsed);
    if (ec != std::errc() || *ptr != '\0')
        throw std::invalid_argument("WVC_ORACLE_CAP must be a non-negative integer");
    return std::min(default_cap, parsed);
}

inline void check_oracle_size(std::size_t n, std::size_t default_cap, const char* what) {
    std::size_t cap = oracle_cap(default_cap);
    if (n > cap)
        throw std::invalid_argument(std::string(what) + ": instance too large for enumeration (n=" +
                                    std::to_string(n) + " > cap " + std::to_string(cap) + ")");
}

// Scale rationals to integers by the lcm of denominators (times `extra` to
// absorb budget denominators). Sums fit int64 for every realistic test
// instance; the rational fallback below keeps exactness for anything wilder.
struct ScaledWeights {
    BigInt scale = 1;
    std::vector<BigInt> values;
    bool fits_int64 = false;
    std::vector<std::int64_t> small;
};

inline ScaledWeights scale_weights(const std::vector<Weight>& ws,
                                   const std::vector<Weight>& extra = {}) {
    ScaledWeights s;
    for (const Weight& w : ws) s.scale = lcm(s.scale, rat_den(w));
    for (const Weight& w : extra) s.scale = lcm(s.scale, rat_den(w));
    BigInt sum = 0;
    for (const Weight& w : ws) {
        s.values.push_back(rat_num(w) * (s.scale / rat_den(w)));
        sum += abs(s.values.back());
    }
    for (const Weight& w : extra) sum += abs(rat_num(w) * (s.scale / rat_den(w)));
    s.fits_int64 = sum < BigInt(std::numeric_limits<std::int64_t>::max() / 4);
    if (s.fits_int64)
        for (const BigInt& v : s.values) s.small.push_back(v.convert_to<std::int64_t>());
    return s;
}

template <typename Int>
Int scaled_of(const ScaledWeights& s, const Weight& w) {
    BigInt v = rat_num(w) * (s.scale / rat_den(w));
    return v.convert_to<Int>();
}

// adjacency bitmask per vertex; mask S is a cover iff N(v) subset of S for
// every v outside S
inline std::vector<std::uint32_t> adjacency_masks(std::size_t n, const std::vector<Edge>& edges) {
    std::vector<std::uint32_t> adj(n, 0);
    for (const Edge& e : edges) {
        adj[e.u] |= std::uint32_t(1) << e.v;
        adj[e.v] |= std::uint32_t(1) << e.u;
    }
    return adj;
}

inline bool mask_is_cover(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
    for (std::size_t v = 0; v < adj.size(); ++v)
        if (!(mask >> v & 1) && (adj[v] & ~mask)) return false;
    return true;
}

template <typename Int>
void min_vc_scan(std::size_t n, const std::vector<std::uint32_t>& adj,
                 const std::vector<Int>& w, Int& best, std::vector<std::uint32_t>& best_masks) {
    const std::uint32_t end = std::uint32_t(1) << n;
    bool have = false;
    for (std::uint32_t mask = 0; mask < end; ++mask) {
        if (!mask_is_cover(adj, mask)) continue;
        Int weight = 0;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
            unsigned v = unsigned(__builtin_ctz(rest));
            weight += w[v];
        }
        if (!have || weight < best) {
            have = true;
            best = weight;
            best_masks.assign(1, mask);
        } else if (weight == best) {
            best_masks.push_back(mask);
        }
    }
}

}  // namespace detail

struct OracleOptimum {
    Weight optimum_weight = 0;
    std::vector<std::vector<VertexId>> all_optimal_covers;
};

// Minimum-weight vertex cover over all 2^n subsets, every minimizer kept.
inline OracleOptimum brute_min_vc(const WeightedGraph& g) {
    detail::check_oracle_size(g.n, 20, "brute_min_vc");
    validate(g);
    auto adj = detail::adjacency_masks(g.n, g.edges);
    detail::ScaledWeights sw = detail::scale_weights(g.weights);

    std::vector<std::uint32_t> best_masks;
    BigInt best;
    if (sw.fits_int64) {
        std::int64_t b = 0;
        detail::min_vc_scan<std::int64_t>(g.n, adj, sw.small, b, best_masks);
        best = b;
    } else {
        detail::min_vc_scan<BigInt>(g.n, adj, sw.values, best, best_masks);
    }

    OracleOptimum out;
    out.optimum_weight = Rational(best, sw.scale);
    for (std::uint32_t mask : best_masks) {
        std::vector<VertexId> cover;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1)
            cover.push_back(VertexId(__builtin_ctz(rest)));
        out.all_optimal_covers.push_back(std::move(cover));
    }
    return out;
}

namespace detail {

template <typename Int>
struct LpHalfScan {
    std::size_t n;
    const std::vector<std::vector<VertexId>>& lower_adj;
    const std::vector<Int>& w;   // weight * scale
    std::vector<int> halves;     // 0, 1, 2
    Int best;
    bool have = false;

    void rec(std::size_t v, Int cur) {
        if (v == n) {
            if (!have || cur < best) {
                best = cur;
                have = true;
            }
            return;
        }
        for (int val = 0; val <= 2; ++val) {
            bool ok = true;
            for (VertexId u : lower_adj[v])
                if (halves[u] + val < 2) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            halves[v] = val;
            rec(v + 1, cur + w[v] * val);
        }
        halves[v] = 0;
    }
};

}  // namespace detail

// Minimum of sum w(v) x_v over all x in {0, 1/2, 1}^n with x_u + x_v >= 1 on
// edges; equals the LP optimum since the vertex cover LP is half-integral.
inline Weight brute_lp_half(const WeightedGraph& g) {
    detail::check_oracle_size(g.n, 12, "brute_lp_half");
    validate(g);
    std::vector<std::vector<VertexId>> lower_adj(g.n);
    for (const Edge& e : g.edges) lower_adj[std::max(e.u, e.v)].push_back(std::min(e.u, e.v));

    detail::ScaledWeights sw = detail::scale_weights(g.weights);
    BigInt best;
    if (sw.fits_int64) {
        detail::LpHalfScan<std::int64_t> scan{g.n, lower_adj, sw.small, std::vector<int>(g.n, 0), 0};
        scan.rec(0, 0);
        best = scan.best;
    } else {
        detail::LpHalfScan<BigInt> scan{g.n, lower_adj, sw.values, std::vector<int>(g.n, 0), 0};
        scan.rec(0, 0);
        best = scan.best;
    }
    return Rational(best, sw.scale * 2);
}

// Does some subset cover the tree with size <= K and red count <= K_R?
inline bool brute_rb(const RbInstance& inst) {
    detail::check_oracle_size(inst.tree.n, 16, "brute_rb");
    validate(inst);
    auto adj = detail::adjacency_masks(inst.tree.n, inst.tree.edges);
    std::uint32_t red_mask = 0;
    for (VertexId v = 0; v < inst.tree.n; ++v)
        if (inst.tree.colors[v] == Color::Red) red_mask |= std::uint32_t(1) << v;

    const std::uint32_t end = std::uint32_t(1) << inst.tree.n;
    for (std::uint32_t mask = 0; mask < end; ++mask) {
        if (__builtin_popcount(mask) > inst.K) continue;
        if (__builtin_popcount(mask & red_mask) > inst.K_R) continue;
        if (detail::mask_is_cover(adj, mask)) return true;
    }
    return false;
}

namespace detail {

template <typename Int>
bool wrb_scan(std::size_t n, const std::vector<std::uint32_t>& adj, std::uint32_t red_mask,
              const std::vector<Int>& w, const Int& budget, const Int& red_budget) {
    if (mask_is_cover(adj, 0)) return true;   // budgets are non-negative
    // lowbit dp for subset sums
    const std::uint32_t end = std::uint32_t(1) << n;
    std::vector<Int> total(end), red(end);
    total[0] = 0;
    red[0] = 0;
    for (std::uint32_t mask = 1; mask < end; ++mask) {
        std::uint32_t low = mask & (mask - 1);
        unsigned v = unsigned(__builtin_ctz(mask));
        total[mask] = total[low] + w[v];
        red[mask] = red[low] + ((red_mask >> v & 1) ? w[v] : Int(0));
        if (total[mask] > budget || red[mask] > red_budget) continue;
        if (mask_is_cover(adj, mask)) return true;
    }
    return false;
}

}  // namespace detail

// Does some cover satisfy total weight <= k and red weight <= k_R?
inline bool brute_wrb(const WrbInstance& inst) {
    detail::check_oracle_size(inst.tree.n, 16, "brute_wrb");
    validate(inst);
    auto adj = detail::adjacency_masks(inst.tree.n, inst.tree.edges);
    std::uint32_t red_mask = 0;
    for (VertexId v = 0; v < inst.tree.n; ++v)
        if (inst.tree.colors[v] == Color::Red) red_mask |= std::uint32_t(1) << v;

    detail::ScaledWeights sw = detail::scale_weights(inst.tree.weights, {inst.k, inst.k_R});
    if (sw.fits_int64) {
        auto budget = detail::scaled_of<std::int64_t>(sw, inst.k);
        auto red_budget = detail::scaled_of<std::int64_t>(sw, inst.k_R);
        return detail::wrb_scan<std::int64_t>(inst.tree.n, adj, red_mask, sw.small, budget,
                                              red_budget);
    }
    auto budget = detail::scaled_of<BigInt>(sw, inst.k);
    auto red_budget = detail::scaled_of<BigInt>(sw, inst.k_R);
    return detail::wrb_scan<BigInt>(inst.tree.n, adj, red_mask, sw.values, budget, red_budget);
}

}  // namespace wvc
