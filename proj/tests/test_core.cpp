#include "wvc/gen.hpp"
#include "wvc/graph.hpp"
#include "wvc/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace wvc;

namespace {

WeightedGraph path3(std::vector<Weight> w = {1, 1, 1}) {
    return make_weighted_graph(3, {{0, 1}, {1, 2}}, std::move(w));
}

WeightedGraph triangle(std::vector<Weight> w = {1, 1, 1}) {
    return make_weighted_graph(3, {{0, 1}, {1, 2}, {0, 2}}, std::move(w));
}

}  // namespace

TEST_CASE("rational parse and format round-trip") {
    for (const char* s : {"0", "1", "-3", "3/2", "-7/5", "1000000000000000000000/7"}) {
        CHECK(format_rational(parse_rational(s)) == s);
    }
    CHECK(format_rational(parse_rational("6/4")) == "3/2");   // lowest terms
    CHECK(format_rational(parse_rational("5/1")) == "5");
    for (const char* s : {"", "1/", "/2", "1/0", "abc", "1.5", "1 ", " 1", "1/-2", "+1"}) {
        CHECK_THROWS_AS(parse_rational(s), std::invalid_argument);
    }
}

TEST_CASE("weight arithmetic is exact") {
    std::vector<Rational> vals{Rational(1, 3), Rational(2, 7), Rational(5), Rational(-9, 4),
                               Rational(1000000007, 3)};
    for (const auto& a : vals)
        for (const auto& b : vals) {
            CHECK((a + b) - b == a);
            if (b != 0) CHECK((a / b) * b == a);
        }
    CHECK(is_integer(Rational(4, 2)));
    CHECK_FALSE(is_integer(Rational(1, 2)));
}

TEST_CASE("validate accepts the smallest valid graph") {
    auto g = make_weighted_graph(2, {{0, 1}}, {1, 1});
    CHECK_NOTHROW(validate(g));
}

TEST_CASE("validate reports the first violated invariant") {
    SECTION("self-loop") {
        WeightedGraph g;
        g.n = 1;
        g.edges = {{0, 0}};
        g.weights = {1};
        CHECK_THROWS_WITH(validate(g), Catch::Matchers::ContainsSubstring("self-loop"));
    }
    SECTION("non-positive weight") {
        auto g = make_weighted_graph(2, {{0, 1}}, {0, 1});
        CHECK_THROWS_WITH(validate(g), Catch::Matchers::ContainsSubstring("non-positive"));
    }
    SECTION("duplicate edge") {
        WeightedGraph g;
        g.n = 2;
        g.edges = {{0, 1}, {1, 0}};
        g.weights = {1, 1};
        CHECK_THROWS_WITH(validate(g), Catch::Matchers::ContainsSubstring("duplicate edge"));
    }
    SECTION("missing weight") {
        WeightedGraph g;
        g.n = 2;
        g.edges = {{0, 1}};
        g.weights = {1};
        CHECK_THROWS_WITH(validate(g), Catch::Matchers::ContainsSubstring("missing weight"));
    }
}

TEST_CASE("min_weight") {
    CHECK(min_weight(path3({1, Rational(3, 2), 2})) == 1);
    CHECK(min_weight(make_weighted_graph(2, {{0, 1}}, {Rational(1, 3), Rational(1, 2)})) ==
          Rational(1, 3));
    CHECK(min_weight(make_weighted_graph(1, {}, {5})) == 5);
    CHECK_THROWS_AS(min_weight(WeightedGraph{}), std::invalid_argument);
}

TEST_CASE("is_vertex_cover") {
    CHECK(is_vertex_cover(triangle(), {0, 1}));
    CHECK(is_vertex_cover(path3(), {0, 2}));
    CHECK_FALSE(is_vertex_cover(path3(), {0}));
    CHECK_THROWS_AS(is_vertex_cover(path3(), {7}), std::out_of_range);
}

TEST_CASE("scale_instance") {
    auto g = path3({2, 4, 6});
    auto [scaled, k] = scale_instance(g, Weight(6), Rational(1, 2));
    CHECK(scaled.weights == std::vector<Weight>{1, 2, 3});
    CHECK(k == 3);

    auto [same, k1] = scale_instance(g, Weight(6), Weight(1));
    CHECK(same == g);
    CHECK(k1 == 6);

    auto third = make_weighted_graph(1, {}, {Rational(1, 3)});
    auto [up, k3] = scale_instance(third, Weight(1), Weight(3));
    CHECK(up.weights == std::vector<Weight>{1});
    CHECK(k3 == 3);

    CHECK_THROWS_AS(scale_instance(g, Weight(1), Weight(0)), std::invalid_argument);
    CHECK_THROWS_AS(scale_instance(g, Weight(1), Weight(-2)), std::invalid_argument);
}

TEST_CASE("cover iff complement is independent") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.n = 6;
        cfg.model = GraphModel::Gnm;
        cfg.m = (seed * 3) % 16;
        cfg.weight_max = 3;
        WeightedGraph g = generate_weighted_graph(cfg);
        for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
            std::vector<VertexId> s, complement;
            for (VertexId v = 0; v < g.n; ++v)
                (mask >> v & 1 ? s : complement).push_back(v);
            bool independent = true;
            for (const Edge& e : g.edges)
                if (!(mask >> e.u & 1) && !(mask >> e.v & 1)) independent = false;
            CHECK(is_vertex_cover(g, s) == independent);
            (void)complement;
        }
    }
}

TEST_CASE("scaling preserves the decision over all subsets") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.n = 7;
        cfg.model = GraphModel::Gnm;
        cfg.m = 9;
        cfg.weight_min = Rational(1, 3);
        cfg.weight_max = 4;
        cfg.fractional_percent = 50;
        WeightedGraph g = generate_weighted_graph(cfg);
        Weight k = Rational(7, 3);
        Rational factor(seed, 3);
        auto [scaled, sk] = scale_instance(g, k, factor);
        for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
            Weight w = 0, sw = 0;
            for (VertexId v = 0; v < g.n; ++v)
                if (mask >> v & 1) {
                    w += g.weights[v];
                    sw += scaled.weights[v];
                }
            CHECK((w <= k) == (sw <= sk));
        }
    }
}

TEST_CASE("induced subgraph keeps weights and internal edges") {
    auto g = make_weighted_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {1, 2, 3, 4});
    InducedSubgraph sub = induced_subgraph(g, {0, 1, 3});
    CHECK(sub.graph.n == 3);
    CHECK(sub.graph.weights == std::vector<Weight>{1, 2, 4});
    CHECK(sub.graph.edges == std::vector<Edge>{{0, 1}, {0, 2}});
    CHECK(sub.original_ids == std::vector<VertexId>{0, 1, 3});
}

TEST_CASE("red-blue tree validation") {
    CHECK_NOTHROW(validate(make_red_blue_tree(1, {}, {Color::Blue})));
    CHECK_THROWS_WITH(validate(make_red_blue_tree(3, {{0, 1}}, {Color::Red, Color::Blue, Color::Blue})),
                      Catch::Matchers::ContainsSubstring("not a tree"));
    CHECK_THROWS_WITH(
        validate(make_red_blue_tree(4, {{0, 1}, {2, 3}, {0, 1}},
                                    {Color::Red, Color::Blue, Color::Blue, Color::Blue})),
        Catch::Matchers::ContainsSubstring("not a tree"));
    RedBlueTree missing_color;
    missing_color.n = 2;
    missing_color.edges = {{0, 1}};
    missing_color.colors = {Color::Red};
    CHECK_THROWS_WITH(validate(missing_color), Catch::Matchers::ContainsSubstring("color"));
}

TEST_CASE("cover solution recomputes totals and red fields") {
    auto t = make_red_blue_tree(3, {{0, 1}, {1, 2}}, {Color::Red, Color::Blue, Color::Red},
                                {Rational(1, 2), 2, 3});
    CoverSolution s = make_cover_solution(t, {2, 0});
    CHECK(s.vertices == std::vector<VertexId>{0, 2});
    CHECK(s.total_weight == Rational(7, 2));
    CHECK(*s.red_weight == Rational(7, 2));
    CHECK(*s.red_count == 2);

    auto unweighted = make_red_blue_tree(2, {{0, 1}}, {Color::Blue, Color::Red});
    CoverSolution u = make_cover_solution(unweighted, {1});
    CHECK(u.total_weight == 1);
    CHECK(*u.red_count == 1);
}
