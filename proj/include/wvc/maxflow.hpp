#pragma once

#include "wvc/rational.hpp"

#include <cstddef>
#include <limits>
#include <vector>

namespace wvc::detail {

// Dinic's algorithm over exact big-integer capacities. Augmentation order is
// fixed by edge insertion order, so the residual graph (and the min cut read
// off it) is deterministic.
class MaxFlow {
public:
    explicit MaxFlow(std::size_t n) : graph_(n) {}

    void add_edge(std::size_t from, std::size_t to, BigInt cap) {
        graph_[from].push_back({to, graph_[to].size(), std::move(cap)});
        graph_[to].push_back({from, graph_[from].size() - 1, 0});
    }

    BigInt run(std::size_t source, std::size_t sink) {
        BigInt inf = 1;   // no augmenting path can carry more than the source arcs
        for (const Arc& a : graph_[source]) inf += a.cap;
        BigInt flow = 0;
        while (bfs_levels(source, sink)) {
            iter_.assign(graph_.size(), 0);
            for (;;) {
                BigInt pushed = dfs_push(source, sink, inf);
                if (pushed == 0) break;
                flow += pushed;
            }
        }
        return flow;
    }

    // Vertices reachable from `source` in the residual graph; call after run().
    std::vector<char> source_side(std::size_t source) const {
        std::vector<char> seen(graph_.size(), 0);
        std::vector<std::size_t> stack{source};
        seen[source] = 1;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (const Arc& a : graph_[v]) {
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = 1;
                    stack.push_back(a.to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        std::size_t to;
        std::size_t rev;
        BigInt cap;
    };

    bool bfs_levels(std::size_t source, std::size_t sink) {
        level_.assign(graph_.size(), -1);
        std::vector<std::size_t> queue{source};
        level_[source] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::size_t v = queue[head];
            for (const Arc& a : graph_[v]) {
                if (a.cap > 0 && level_[a.to] < 0) {
                    level_[a.to] = level_[v] + 1;
                    queue.push_back(a.to);
                }
            }
        }
        return level_[sink] >= 0;
    }

    BigInt dfs_push(std::size_t v, std::size_t sink, BigInt limit) {
        if (v == sink) return limit;
        for (std::size_t& i = iter_[v]; i < graph_[v].size(); ++i) {
            Arc& a = graph_[v][i];
            if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
            BigInt pushed = dfs_push(a.to, sink, std::min(limit, a.cap));
            if (pushed > 0) {
                a.cap -= pushed;
                graph_[a.to][a.rev].cap += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<std::vector<Arc>> graph_;
    std::vector<int> level_;
    std::vector<std::size_t> iter_;
};

}  // namespace wvc::detail
