#pragma once

#include "wvc/graph.hpp"
#include "wvc/io.hpp"

#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace wvc {

enum class GraphModel { Gnm, Tree, Path, Cycle, Star };

inline const char* model_name(GraphModel m) {
    switch (m) {
        case GraphModel::Gnm: return "gnm";
        case GraphModel::Tree: return "tree";
        case GraphModel::Path: return "path";
        case GraphModel::Cycle: return "cycle";
        case GraphModel::Star: return "star";
    }
    return "?";
}

inline GraphModel parse_model(std::string_view s) {
    if (s == "gnm") return GraphModel::Gnm;
    if (s == "tree") return GraphModel::Tree;
    if (s == "path") return GraphModel::Path;
    if (s == "cycle") return GraphModel::Cycle;
    if (s == "star") return GraphModel::Star;
    throw std::invalid_argument("unknown model '" + std::string(s) + "'");
}

// Same seed and config always produce the same bytes: mt19937_64 is pinned by
// the standard and all draws below avoid std distributions (which are not).
struct GeneratorConfig {
    std::uint64_t seed = 1;
    std::size_t n = 1;
    GraphModel model = GraphModel::Path;
    std::size_t m = 0;              // gnm only
    Weight weight_min = 1;
    Weight weight_max = 1;
    int fractional_percent = 0;     // share of vertices given a non-integer weight
    int red_percent = -1;           // >= 0 emits colors
};

namespace detail {

inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    // rejection keeps the draw unbiased
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    for (;;) {
        std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

inline BigInt floor_rat(const Rational& r) {
    // positive inputs only in this file
    return rat_num(r) / rat_den(r);
}

inline BigInt ceil_rat(const Rational& r) {
    return (rat_num(r) + rat_den(r) - 1) / rat_den(r);
}

inline std::uint64_t range_size(const BigInt& lo, const BigInt& hi) {
    BigInt size = hi - lo + 1;
    if (size > BigInt(UINT64_MAX >> 1))
        throw std::invalid_argument("weight range too wide to sample");
    return size.convert_to<std::uint64_t>();
}

// Weight denominators come from {1,2,3,4,5}: integers directly, fractional
// draws pick a denominator then a non-multiple numerator within range.
inline Weight draw_weight(std::mt19937_64& rng, const GeneratorConfig& cfg) {
    bool fractional =
        cfg.fractional_percent > 0 && draw_below(rng, 100) < std::uint64_t(cfg.fractional_percent);
    if (!fractional) {
        BigInt lo = ceil_rat(cfg.weight_min);
        BigInt hi = floor_rat(cfg.weight_max);
        if (lo > hi) throw std::invalid_argument("weight range contains no integer");
        return Rational(lo + BigInt(draw_below(rng, range_size(lo, hi))));
    }
    std::uint64_t start = draw_below(rng, 4);   // denominator 2..5
    for (std::uint64_t step = 0; step < 4; ++step) {
        std::uint64_t den = 2 + (start + step) % 4;
        BigInt lo = ceil_rat(cfg.weight_min * den);
        BigInt hi = floor_rat(cfg.weight_max * den);
        // at least one numerator in [lo,hi] that is not a multiple of den?
        BigInt multiples = hi / den - (lo - 1) / den;
        if (lo > hi || multiples == hi - lo + 1) continue;
        for (;;) {
            BigInt p = lo + BigInt(draw_below(rng, range_size(lo, hi)));
            if (p % den != 0) return Rational(p, den);
        }
    }
    throw std::invalid_argument("weight range admits no fractional weight with denominator <= 5");
}

}  // namespace detail

// Builds the instance structure; draw order is edges, then weights, then
// colors, so adding colors never perturbs the rest.
inline ParsedInstance generate_instance(const GeneratorConfig& cfg) {
    if (cfg.n == 0) throw std::invalid_argument("need at least one vertex");
    if (cfg.weight_min <= 0 || cfg.weight_min > cfg.weight_max)
        throw std::invalid_argument("weight range must satisfy 0 < min <= max");
    if (cfg.fractional_percent < 0 || cfg.fractional_percent > 100)
        throw std::invalid_argument("fractional percent out of [0,100]");
    if (cfg.red_percent > 100) throw std::invalid_argument("red percent out of [0,100]");

    std::mt19937_64 rng(cfg.seed);
    ParsedInstance inst;
    inst.n = cfg.n;

    switch (cfg.model) {
        case GraphModel::Path:
            for (std::size_t v = 1; v < cfg.n; ++v)
                inst.edges.push_back({VertexId(v - 1), VertexId(v)});
            break;
        case GraphModel::Cycle:
            if (cfg.n < 3) throw std::invalid_argument("cycle needs n >= 3");
            for (std::size_t v = 1; v < cfg.n; ++v)
                inst.edges.push_back({VertexId(v - 1), VertexId(v)});
            inst.edges.push_back({VertexId(0), VertexId(cfg.n - 1)});
            break;
        case GraphModel::Star:
            for (std::size_t v = 1; v < cfg.n; ++v)
                inst.edges.push_back({VertexId(0), VertexId(v)});
            break;
        case GraphModel::Tree:
            for (std::size_t v = 1; v < cfg.n; ++v) {
                VertexId parent = VertexId(detail::draw_below(rng, v));
                inst.edges.push_back(normalized({parent, VertexId(v)}));
            }
            break;
        case GraphModel::Gnm: {
            std::size_t max_edges = cfg.n * (cfg.n - 1) / 2;
            if (cfg.m > max_edges)
                throw std::invalid_argument("m exceeds the simple-graph maximum " +
                                            std::to_string(max_edges));
            std::set<Edge> chosen;
            while (chosen.size() < cfg.m) {
                VertexId u = VertexId(detail::draw_below(rng, cfg.n));
                VertexId v = VertexId(detail::draw_below(rng, cfg.n));
                if (u == v) continue;
                chosen.insert(normalized({u, v}));
            }
            inst.edges.assign(chosen.begin(), chosen.end());
            break;
        }
    }
    inst.m = inst.edges.size();

    for (std::size_t v = 0; v < cfg.n; ++v) inst.weights.push_back(detail::draw_weight(rng, cfg));

    if (cfg.red_percent >= 0)
        for (std::size_t v = 0; v < cfg.n; ++v)
            inst.colors.push_back(detail::draw_below(rng, 100) < std::uint64_t(cfg.red_percent)
                                      ? Color::Red
                                      : Color::Blue);
    return inst;
}

inline WeightedGraph generate_weighted_graph(const GeneratorConfig& cfg) {
    return to_weighted_graph(generate_instance(cfg));
}

inline RedBlueTree generate_red_blue_tree(const GeneratorConfig& cfg) {
    ParsedInstance inst = generate_instance(cfg);
    RedBlueTree t = make_red_blue_tree(inst.n, inst.edges, inst.colors, inst.weights);
    validate(t);
    return t;
}

// Deterministic instance text for a config (golden-file stable).
inline std::string generate(const GeneratorConfig& cfg) {
    ParsedInstance inst = generate_instance(cfg);
    if (inst.colored()) {
        RedBlueTree t = make_red_blue_tree(inst.n, inst.edges, inst.colors, inst.weights);
        return serialize(t);
    }
    return serialize(to_weighted_graph(inst));
}

}  // namespace wvc
