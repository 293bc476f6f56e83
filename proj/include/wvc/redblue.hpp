#pragma once

#include "wvc/branching.hpp"
#include "wvc/graph.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace wvc {

// Unweighted variant: cover size budget K, red-vertex count budget K_R.
struct RbInstance {
    RedBlueTree tree;
    std::int64_t K = 0;
    std::int64_t K_R = 0;
};

// Weighted variant: total weight budget k, red weight budget k_R.
struct WrbInstance {
    RedBlueTree tree;
    Weight k = 0;
    Weight k_R = 0;
};

// Committing a vertex removes it from the live forest; reductions and the dp
// run over the original tree plus an alive mask, so original ids survive.
struct RbSubInstance {
    std::vector<char> alive;
    std::int64_t K = 0;
    std::int64_t K_R = 0;
    std::vector<VertexId> committed;
};

inline void validate(const RbInstance& inst) {
    validate(inst.tree);
    if (inst.K < 0 || inst.K_R < 0) throw std::invalid_argument("budgets must be non-negative");
}

inline void validate(const WrbInstance& inst) {
    validate(inst.tree);
    if (!inst.tree.weighted()) throw std::invalid_argument("weighted instance needs weights");
    if (inst.k < 0 || inst.k_R < 0) throw std::invalid_argument("budgets must be non-negative");
}

inline RbSubInstance make_sub_instance(const RbInstance& inst) {
    validate(inst);
    return {std::vector<char>(inst.tree.n, 1), inst.K, inst.K_R, {}};
}

enum class RbReduceKind { Committed, NoInstance, NotApplicable };

struct RbReduceResult {
    RbReduceKind kind = RbReduceKind::NotApplicable;
    VertexId vertex = 0;   // committed vertex, original id
    RbSubInstance next;
};

namespace detail {

inline RbReduceResult rb_commit(const RedBlueTree& t, const RbSubInstance& sub, VertexId v) {
    RbReduceResult res;
    res.vertex = v;
    bool red = t.colors[v] == Color::Red;
    if (sub.K - 1 < 0 || (red && sub.K_R - 1 < 0)) {
        res.kind = RbReduceKind::NoInstance;
        return res;
    }
    res.kind = RbReduceKind::Committed;
    res.next = sub;
    res.next.alive[v] = 0;
    res.next.K -= 1;
    if (red) res.next.K_R -= 1;
    res.next.committed.push_back(v);
    return res;
}

}  // namespace detail

// A vertex with more than K live neighbors is in every cover small enough:
// taking its whole neighborhood instead would already exceed K.
inline RbReduceResult rb_reduce_high_degree(const RedBlueTree& t, const RbSubInstance& sub) {
    for (VertexId v = 0; v < t.n; ++v) {
        if (!sub.alive[v]) continue;
        std::int64_t deg = 0;
        for (VertexId u : t.adj[v])
            if (sub.alive[u]) ++deg;
        if (deg > sub.K) return detail::rb_commit(t, sub, v);
    }
    return {};
}

// Same forcing argument against the red budget: more than K_R red neighbors.
inline RbReduceResult rb_reduce_red_neighbors(const RedBlueTree& t, const RbSubInstance& sub) {
    for (VertexId v = 0; v < t.n; ++v) {
        if (!sub.alive[v]) continue;
        std::int64_t reds = 0;
        for (VertexId u : t.adj[v])
            if (sub.alive[u] && t.colors[u] == Color::Red) ++reds;
        if (reds > sub.K_R) return detail::rb_commit(t, sub, v);
    }
    return {};
}

inline RbReduceResult rb_reduce_high_degree(const RbInstance& inst) {
    return rb_reduce_high_degree(inst.tree, make_sub_instance(inst));
}

inline RbReduceResult rb_reduce_red_neighbors(const RbInstance& inst) {
    return rb_reduce_red_neighbors(inst.tree, make_sub_instance(inst));
}

// Number of ways to write K_R as an ordered sum of l non-negative integers,
// i.e. C(K_R + l - 1, l - 1). Diagnostic only; the dp folds children instead
// of enumerating these.
inline BigInt compositions_count(std::size_t l, std::size_t k_r) {
    if (l == 0) throw std::invalid_argument("need at least one part");
    BigInt result = 1;
    for (std::size_t i = 1; i < l; ++i) {
        result *= BigInt(k_r + i);
        result /= BigInt(i);
    }
    return result;
}

namespace detail {

inline constexpr std::int64_t kInfSize = std::numeric_limits<std::int64_t>::max() / 4;

// Rooted-forest dp over (vertex, in/out of cover, exact red count). Children
// fold one at a time with a red-count knapsack; the per-child prefix tables
// are kept so a witness can be read back top-down.
struct RbDp {
    const RedBlueTree& tree;
    const RbSubInstance& sub;
    std::int64_t kr;                               // red-count dimension bound
    std::uint64_t cells = 0;

    std::vector<std::vector<VertexId>> children;
    std::vector<std::vector<std::int64_t>> in_tab, out_tab;
    std::vector<std::vector<std::vector<std::int64_t>>> in_prefix, out_prefix;
    std::vector<VertexId> roots;

    explicit RbDp(const RedBlueTree& t, const RbSubInstance& s)
        : tree(t), sub(s), kr(s.K_R) {}

    static std::vector<std::int64_t> fold(const std::vector<std::int64_t>& a,
                                          const std::vector<std::int64_t>& b) {
        std::vector<std::int64_t> out(a.size(), kInfSize);
        for (std::size_t ra = 0; ra < a.size(); ++ra) {
            if (a[ra] >= kInfSize) continue;
            for (std::size_t rb = 0; ra + rb < a.size(); ++rb) {
                if (b[rb] >= kInfSize) continue;
                out[ra + rb] = std::min(out[ra + rb], a[ra] + b[rb]);
            }
        }
        return out;
    }

    std::vector<std::int64_t> child_contrib(VertexId c, bool parent_in) const {
        if (!parent_in) return in_tab[c];   // uncovered parent forces the child in
        std::vector<std::int64_t> m(std::size_t(kr) + 1);
        for (std::size_t r = 0; r < m.size(); ++r) m[r] = std::min(in_tab[c][r], out_tab[c][r]);
        return m;
    }

    void run() {
        const std::size_t n = tree.n;
        children.assign(n, {});
        in_tab.assign(n, {});
        out_tab.assign(n, {});
        in_prefix.assign(n, {});
        out_prefix.assign(n, {});

        std::vector<char> visited(n, 0);
        for (VertexId root = 0; root < n; ++root) {
            if (!sub.alive[root] || visited[root]) continue;
            roots.push_back(root);
            // iterative post-order over the component
            std::vector<std::pair<VertexId, VertexId>> stack{{root, root}};
            std::vector<VertexId> order;
            visited[root] = 1;
            while (!stack.empty()) {
                auto [v, parent] = stack.back();
                stack.pop_back();
                order.push_back(v);
                for (VertexId u : tree.adj[v]) {
                    if (u == parent || !sub.alive[u]) continue;
                    children[v].push_back(u);
                    visited[u] = 1;
                    stack.push_back({u, v});
                }
            }
            for (auto it = order.rbegin(); it != order.rend(); ++it) compute(*it);
        }
    }

    void compute(VertexId v) {
        const std::size_t dim = std::size_t(kr) + 1;
        bool red = tree.colors[v] == Color::Red;

        std::vector<std::int64_t> in_acc(dim, kInfSize);
        if (!red)
            in_acc[0] = 1;
        else if (kr >= 1)
            in_acc[1] = 1;
        std::vector<std::int64_t> out_acc(dim, kInfSize);
        out_acc[0] = 0;

        in_prefix[v].push_back(in_acc);
        out_prefix[v].push_back(out_acc);
        for (VertexId c : children[v]) {
            in_acc = fold(in_acc, child_contrib(c, true));
            out_acc = fold(out_acc, child_contrib(c, false));
            in_prefix[v].push_back(in_acc);
            out_prefix[v].push_back(out_acc);
        }
        in_tab[v] = std::move(in_acc);
        out_tab[v] = std::move(out_acc);
        cells += 2 * dim;
    }

    // Reads back one optimal child split for (v, state, r), preferring the
    // out state and the smallest child red count; deterministic. Explicit
    // stack so deep path-shaped trees cannot overflow the call stack.
    void reconstruct(VertexId v, bool state_in, std::int64_t r, std::vector<VertexId>& picks) const {
        struct Frame {
            VertexId v;
            bool in;
            std::int64_t r;
        };
        std::vector<Frame> stack{{v, state_in, r}};
        while (!stack.empty()) {
            Frame f = stack.back();
            stack.pop_back();
            if (f.in) picks.push_back(f.v);
            const auto& prefix = f.in ? in_prefix[f.v] : out_prefix[f.v];
            std::int64_t target = f.r;
            for (std::size_t i = children[f.v].size(); i-- > 0;) {
                VertexId c = children[f.v][i];
                std::vector<std::int64_t> contrib = child_contrib(c, f.in);
                for (std::int64_t rc = 0; rc <= target; ++rc) {
                    if (contrib[rc] >= kInfSize) continue;
                    if (prefix[i][target - rc] >= kInfSize) continue;
                    if (prefix[i][target - rc] + contrib[rc] != prefix[i + 1][target]) continue;
                    bool child_in = true;
                    if (f.in && out_tab[c][rc] <= in_tab[c][rc]) child_in = false;
                    stack.push_back({c, child_in, rc});
                    target -= rc;
                    break;
                }
            }
        }
    }
};

}  // namespace detail

struct RbOptions {
    bool use_reductions = true;
};

// Decision for the unweighted red-blue problem. Applies both reductions
// exhaustively, then folds the component dp tables and scans red counts
// r <= K_R for a cover of size <= K. stats.nodes_expanded reports dp cells.
inline DecisionResult rb_decide(const RbInstance& inst, RbOptions options = {}) {
    RbSubInstance sub = make_sub_instance(inst);
    DecisionResult res;
    res.stats.initial_k = Weight(inst.K);
    res.stats.initial_l = std::size_t(inst.K_R);

    if (options.use_reductions) {
        for (;;) {
            RbReduceResult r = rb_reduce_high_degree(inst.tree, sub);
            if (r.kind == RbReduceKind::NoInstance) return res;
            if (r.kind == RbReduceKind::Committed) {
                sub = std::move(r.next);
                continue;
            }
            r = rb_reduce_red_neighbors(inst.tree, sub);
            if (r.kind == RbReduceKind::NoInstance) return res;
            if (r.kind == RbReduceKind::Committed) {
                sub = std::move(r.next);
                continue;
            }
            break;
        }
    }

    detail::RbDp dp(inst.tree, sub);
    dp.run();
    res.stats.nodes_expanded = dp.cells;

    // fold component roots, tracking prefixes for the witness split
    const std::size_t dim = std::size_t(sub.K_R) + 1;
    std::vector<std::vector<std::int64_t>> comp_tabs;
    std::vector<std::vector<std::int64_t>> prefixes;
    std::vector<std::int64_t> acc(dim, detail::kInfSize);
    acc[0] = 0;
    prefixes.push_back(acc);
    for (VertexId root : dp.roots) {
        std::vector<std::int64_t> tab(dim);
        for (std::size_t r = 0; r < dim; ++r)
            tab[r] = std::min(dp.in_tab[root][r], dp.out_tab[root][r]);
        comp_tabs.push_back(tab);
        acc = detail::RbDp::fold(acc, tab);
        prefixes.push_back(acc);
    }

    std::int64_t best_r = -1;
    for (std::size_t r = 0; r < dim; ++r)
        if (acc[r] <= sub.K) {
            best_r = std::int64_t(r);
            break;
        }
    if (best_r < 0) return res;

    res.answer = true;
    std::vector<VertexId> picks = sub.committed;
    std::int64_t target = best_r;
    for (std::size_t i = dp.roots.size(); i-- > 0;) {
        for (std::int64_t rc = 0; rc <= target; ++rc) {
            if (comp_tabs[i][rc] >= detail::kInfSize) continue;
            if (prefixes[i][target - rc] >= detail::kInfSize) continue;
            if (prefixes[i][target - rc] + comp_tabs[i][rc] != prefixes[i + 1][target]) continue;
            VertexId root = dp.roots[i];
            bool root_in = dp.in_tab[root][rc] < dp.out_tab[root][rc];
            dp.reconstruct(root, root_in, rc, picks);
            target -= rc;
            break;
        }
    }

    // count semantics: the budgets bound size and red count, not file weights
    std::sort(picks.begin(), picks.end());
    CoverSolution witness;
    witness.total_weight = Weight(picks.size());
    std::size_t reds = 0;
    for (VertexId v : picks)
        if (inst.tree.colors[v] == Color::Red) ++reds;
    witness.red_count = reds;
    witness.red_weight = Weight(reds);
    witness.vertices = std::move(picks);
    res.witness = std::move(witness);
    return res;
}

// -------------------- weighted variant --------------------

// One achievable (total weight, red weight) pair for a subtree together with
// the vertex set realizing it (bitmask over the tree).
struct ParetoPoint {
    Weight total = 0;
    Weight red = 0;
    std::vector<std::uint64_t> chosen;
};

using ParetoFront = std::vector<ParetoPoint>;

namespace detail {

inline std::vector<std::uint64_t> empty_mask(std::size_t n) {
    return std::vector<std::uint64_t>((n + 63) / 64, 0);
}

inline void mask_set(std::vector<std::uint64_t>& m, VertexId v) {
    m[v >> 6] |= std::uint64_t(1) << (v & 63);
}

inline std::vector<std::uint64_t> mask_or(const std::vector<std::uint64_t>& a,
                                          const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] | b[i];
    return out;
}

}  // namespace detail

inline std::vector<VertexId> mask_vertices(const std::vector<std::uint64_t>& mask) {
    std::vector<VertexId> out;
    for (std::size_t w = 0; w < mask.size(); ++w)
        for (std::size_t b = 0; b < 64; ++b)
            if (mask[w] & (std::uint64_t(1) << b)) out.push_back(VertexId(w * 64 + b));
    return out;
}

// Keeps the non-dominated points: totals strictly increasing, reds strictly
// decreasing. Cost ties resolve to the lexicographically smallest mask.
inline ParetoFront prune_front(ParetoFront points) {
    std::sort(points.begin(), points.end(), [](const ParetoPoint& a, const ParetoPoint& b) {
        if (a.total != b.total) return a.total < b.total;
        if (a.red != b.red) return a.red < b.red;
        return a.chosen < b.chosen;
    });
    ParetoFront kept;
    for (auto& p : points) {
        if (!kept.empty() && (p.total == kept.back().total || p.red >= kept.back().red)) continue;
        kept.push_back(std::move(p));
    }
    return kept;
}

inline bool is_pareto_front(const ParetoFront& front) {
    for (std::size_t i = 1; i < front.size(); ++i)
        if (front[i].total <= front[i - 1].total || front[i].red >= front[i - 1].red)
            return false;
    return true;
}

// Minkowski-style merge: every pair of points sums (masks union), then prune.
inline ParetoFront merge_fronts_sum(const ParetoFront& a, const ParetoFront& b) {
    ParetoFront all;
    all.reserve(a.size() * b.size());
    for (const ParetoPoint& pa : a)
        for (const ParetoPoint& pb : b)
            all.push_back({pa.total + pb.total, pa.red + pb.red,
                           detail::mask_or(pa.chosen, pb.chosen)});
    return prune_front(std::move(all));
}

inline ParetoFront merge_fronts_union(ParetoFront a, const ParetoFront& b) {
    a.insert(a.end(), b.begin(), b.end());
    return prune_front(std::move(a));
}

struct WrbOptions {
    bool check_fronts = false;   // re-verify the dominance invariant after every merge
};

namespace detail {

struct WrbDp {
    const RedBlueTree& tree;
    bool check;
    std::uint64_t points_built = 0;

    std::vector<ParetoFront> in_front, out_front;

    WrbDp(const RedBlueTree& t, bool check_fronts) : tree(t), check(check_fronts) {
        in_front.resize(t.n);
        out_front.resize(t.n);
    }

    void checked(const ParetoFront& f) const {
        assert(is_pareto_front(f));
        if (check && !is_pareto_front(f))
            throw std::logic_error("pareto front invariant violated");
    }

    ParetoFront merged_sum(const ParetoFront& a, const ParetoFront& b) {
        ParetoFront f = merge_fronts_sum(a, b);
        checked(f);
        points_built += f.size();
        return f;
    }

    std::vector<VertexId> roots;

    void run() {
        std::vector<char> visited(tree.n, 0);
        std::vector<std::vector<VertexId>> children(tree.n);
        for (VertexId root = 0; root < tree.n; ++root) {
            if (visited[root]) continue;
            roots.push_back(root);
            std::vector<std::pair<VertexId, VertexId>> stack{{root, root}};
            std::vector<VertexId> order;
            visited[root] = 1;
            while (!stack.empty()) {
                auto [v, parent] = stack.back();
                stack.pop_back();
                order.push_back(v);
                for (VertexId u : tree.adj[v]) {
                    if (u == parent) continue;
                    children[v].push_back(u);
                    visited[u] = 1;
                    stack.push_back({u, v});
                }
            }
            for (auto it = order.rbegin(); it != order.rend(); ++it) {
                VertexId v = *it;
                Weight w = tree.weights[v];
                bool red = tree.colors[v] == Color::Red;
                ParetoPoint base_in{w, red ? w : Weight(0), empty_mask(tree.n)};
                mask_set(base_in.chosen, v);
                ParetoFront in{std::move(base_in)};
                ParetoFront out{ParetoPoint{0, 0, empty_mask(tree.n)}};
                for (VertexId c : children[v]) {
                    ParetoFront contrib = merge_fronts_union(in_front[c], out_front[c]);
                    checked(contrib);
                    in = merged_sum(in, contrib);
                    out = merged_sum(out, in_front[c]);
                }
                in_front[v] = std::move(in);
                out_front[v] = std::move(out);
            }
        }
    }
};

}  // namespace detail

// Exact decision for the weighted red-blue problem: each (vertex, state)
// carries the Pareto front of achievable (total, red) pairs of its subtree.
// Fronts can grow exponentially on adversarial weight patterns; the solver
// stays exact and pays the memory rather than approximating, so it is meant
// for desk-scale trees.
inline DecisionResult wrb_decide(const WrbInstance& inst, WrbOptions options = {}) {
    validate(inst);
    DecisionResult res;
    res.stats.initial_k = inst.k;

    detail::WrbDp dp(inst.tree, options.check_fronts);
    dp.run();

    ParetoFront global{ParetoPoint{0, 0, detail::empty_mask(inst.tree.n)}};
    for (VertexId root : dp.roots) {
        ParetoFront rf = merge_fronts_union(dp.in_front[root], dp.out_front[root]);
        global = merge_fronts_sum(global, rf);
    }
    res.stats.nodes_expanded = dp.points_built;

    for (const ParetoPoint& p : global) {
        if (p.total <= inst.k && p.red <= inst.k_R) {
            res.answer = true;
            res.witness = make_cover_solution(inst.tree, mask_vertices(p.chosen));
            break;
        }
    }
    return res;
}

}  // namespace wvc
