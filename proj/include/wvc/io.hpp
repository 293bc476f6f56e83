#pragma once

#include "wvc/graph.hpp"

#include <charconv>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wvc {

// Instance text format, one declaration per line, '#' starts a comment:
//   p wvc <n> <m>
//   v <id> <weight>          weight as p or p/q, 0-based ids
//   v <id> <weight> <R|B>    colored variant (all v-lines or none)
//   e <u> <v>
// Parsing is strict: unknown tokens, duplicate declarations, or counts
// disagreeing with the header are errors carrying the offending line number.

struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

struct ParsedInstance {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t header_line = 0;
    std::vector<Edge> edges;
    std::vector<Weight> weights;
    std::vector<Color> colors;   // empty for uncolored instances

    bool colored() const { return !colors.empty(); }
};

namespace detail {

inline std::vector<std::string_view> tokenize(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

inline std::size_t parse_count(std::string_view tok, std::size_t line_no, const char* what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line_no, std::string("malformed ") + what + " '" + std::string(tok) + "'");
    return value;
}

}  // namespace detail

inline ParsedInstance parse_instance(std::string_view text) {
    ParsedInstance inst;
    bool have_header = false;
    std::vector<std::optional<Weight>> weights;
    std::vector<std::optional<Color>> colors;
    std::vector<std::size_t> vertex_lines;
    std::set<Edge> seen_edges;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        auto tokens = detail::tokenize(line);
        if (tokens.empty()) {
            if (pos > text.size()) break;
            continue;
        }

        if (!have_header) {
            if (tokens[0] != "p")
                throw ParseError(line_no, "expected header 'p wvc <n> <m>' before declarations");
            if (tokens.size() != 4 || tokens[1] != "wvc")
                throw ParseError(line_no, "malformed header, expected 'p wvc <n> <m>'");
            inst.n = detail::parse_count(tokens[2], line_no, "vertex count");
            inst.m = detail::parse_count(tokens[3], line_no, "edge count");
            inst.header_line = line_no;
            have_header = true;
            weights.assign(inst.n, std::nullopt);
            colors.assign(inst.n, std::nullopt);
            vertex_lines.assign(inst.n, 0);
            continue;
        }

        if (tokens[0] == "p") throw ParseError(line_no, "duplicate header");

        if (tokens[0] == "v") {
            if (tokens.size() != 3 && tokens.size() != 4)
                throw ParseError(line_no, "malformed vertex line, expected 'v <id> <weight> [R|B]'");
            std::size_t id = detail::parse_count(tokens[1], line_no, "vertex id");
            if (id >= inst.n) throw ParseError(line_no, "vertex id " + std::to_string(id) +
                                                             " out of range [0," +
                                                             std::to_string(inst.n) + ")");
            if (weights[id]) throw ParseError(line_no, "duplicate vertex " + std::to_string(id));
            Weight w;
            try {
                w = parse_rational(tokens[2]);
            } catch (const std::invalid_argument& e) {
                throw ParseError(line_no, e.what());
            }
            if (w <= 0) throw ParseError(line_no, "non-positive weight on vertex " + std::to_string(id));
            weights[id] = std::move(w);
            vertex_lines[id] = line_no;
            if (tokens.size() == 4) {
                if (tokens[3] == "R")
                    colors[id] = Color::Red;
                else if (tokens[3] == "B")
                    colors[id] = Color::Blue;
                else
                    throw ParseError(line_no, "unknown color token '" + std::string(tokens[3]) + "'");
            }
            continue;
        }

        if (tokens[0] == "e") {
            if (tokens.size() != 3)
                throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
            std::size_t u = detail::parse_count(tokens[1], line_no, "vertex id");
            std::size_t v = detail::parse_count(tokens[2], line_no, "vertex id");
            if (u >= inst.n || v >= inst.n)
                throw ParseError(line_no, "edge endpoint out of range [0," + std::to_string(inst.n) + ")");
            if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
            Edge e = normalized({VertexId(u), VertexId(v)});
            if (!seen_edges.insert(e).second)
                throw ParseError(line_no, "duplicate edge {" + std::to_string(e.u) + "," +
                                              std::to_string(e.v) + "}");
            inst.edges.push_back(e);
            continue;
        }

        throw ParseError(line_no, "unknown declaration '" + std::string(tokens[0]) + "'");
    }

    if (!have_header) throw ParseError(line_no, "missing header 'p wvc <n> <m>'");
    if (inst.edges.size() != inst.m)
        throw ParseError(line_no, "header announced " + std::to_string(inst.m) + " edges but " +
                                      std::to_string(inst.edges.size()) + " were declared");

    std::size_t colored = 0;
    for (VertexId v = 0; v < inst.n; ++v) {
        if (!weights[v])
            throw ParseError(line_no, "vertex " + std::to_string(v) + " has no v-line");
        if (colors[v]) ++colored;
    }
    if (colored != 0 && colored != inst.n) {
        for (VertexId v = 0; v < inst.n; ++v)
            if (!colors[v])
                throw ParseError(vertex_lines[v],
                                 "vertex " + std::to_string(v) + " lacks a color but others are colored");
    }

    inst.weights.reserve(inst.n);
    for (auto& w : weights) inst.weights.push_back(std::move(*w));
    if (colored == inst.n && inst.n > 0)
        for (auto& c : colors) inst.colors.push_back(*c);
    return inst;
}

inline WeightedGraph to_weighted_graph(const ParsedInstance& inst) {
    WeightedGraph g = make_weighted_graph(inst.n, inst.edges, inst.weights);
    validate(g);
    return g;
}

inline RedBlueTree to_red_blue_tree(const ParsedInstance& inst) {
    if (!inst.colored())
        throw ParseError(inst.header_line, "instance has no R/B color tokens but a tree solver needs them");
    RedBlueTree t = make_red_blue_tree(inst.n, inst.edges, inst.colors, inst.weights);
    try {
        validate(t);
    } catch (const std::invalid_argument& e) {
        throw ParseError(inst.header_line, e.what());
    }
    return t;
}

inline std::string serialize(const WeightedGraph& g) {
    std::ostringstream out;
    out << "p wvc " << g.n << ' ' << g.edges.size() << '\n';
    for (VertexId v = 0; v < g.n; ++v)
        out << "v " << v << ' ' << format_rational(g.weights[v]) << '\n';
    for (const Edge& e : g.edges) out << "e " << e.u << ' ' << e.v << '\n';
    return out.str();
}

inline std::string serialize(const RedBlueTree& t) {
    std::ostringstream out;
    out << "p wvc " << t.n << ' ' << t.edges.size() << '\n';
    for (VertexId v = 0; v < t.n; ++v) {
        out << "v " << v << ' ' << (t.weighted() ? format_rational(t.weights[v]) : "1") << ' '
            << (t.colors[v] == Color::Red ? 'R' : 'B') << '\n';
    }
    for (const Edge& e : t.edges) out << "e " << e.u << ' ' << e.v << '\n';
    return out.str();
}

}  // namespace wvc
