#include "wvc/bench.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

using namespace wvc;

TEST_CASE("empty suite writes a header-only CSV") {
    BenchResult r = run_bench({.count = 0});
    CHECK(bench_csv(r) == "instance,k,l,nodes_expanded,bound\n");
}

TEST_CASE("bench rows carry the measure and the summary parses back") {
    BenchResult r = run_bench({.count = 8});
    REQUIRE(r.rows.size() == 8);
    for (const BenchRow& row : r.rows) {
        CHECK(row.nodes_expanded >= 1);
        CHECK(row.bound > 0.0);
        double expected = std::pow(kBranchingRoot, to_double(row.k) + double(row.l));
        CHECK(row.bound == Catch::Approx(expected));
    }
    CHECK(r.max_ratio > 0.0);
    CHECK(std::isfinite(r.max_ratio));

    std::istringstream csv(bench_csv(r));
    CHECK(parse_bench_csv_max_ratio(csv) == Catch::Approx(r.max_ratio));

    // deterministic: same config, same result bytes
    CHECK(bench_csv(run_bench({.count = 8})) == bench_csv(r));
}
