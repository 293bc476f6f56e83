#pragma once

#include "wvc/branching.hpp"
#include "wvc/gen.hpp"
#include "wvc/lp.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <string>
#include <vector>

namespace wvc {

// Bench harness: a fixed seeded suite of instances run through branch_decide,
// node counts reported against the 1.4656^(k+l) measure. Fully deterministic,
// so the committed baseline CSV doubles as a regression gate.
struct BenchConfig {
    std::uint64_t seed = 20240601;
    std::size_t count = 100;
};

struct BenchRow {
    std::string instance;
    Weight k = 0;
    std::size_t l = 0;   // fractional-weight vertices
    std::uint64_t nodes_expanded = 0;
    double bound = 0.0;
};

struct BenchResult {
    std::vector<BenchRow> rows;
    double max_ratio = 0.0;
};

inline BenchResult run_bench(const BenchConfig& cfg) {
    BenchResult result;
    for (std::size_t i = 0; i < cfg.count; ++i) {
        GeneratorConfig gen;
        gen.seed = cfg.seed + i;
        gen.n = 10 + 2 * (i % 4);
        gen.weight_min = 1;
        gen.weight_max = 4;
        gen.fractional_percent = 40;
        switch (i % 4) {
            case 0:
                gen.model = GraphModel::Gnm;
                gen.m = gen.n * 2;
                break;
            case 1:
                gen.model = GraphModel::Tree;
                break;
            case 2:
                gen.model = GraphModel::Gnm;
                gen.m = gen.n * 3;
                break;
            default:
                gen.model = GraphModel::Gnm;
                gen.m = gen.n * 5 / 2;
                break;
        }
        WeightedGraph g = generate_weighted_graph(gen);

        // budgets pinned to the LP bound so the suite mixes YES and NO runs
        Weight lp_obj = solve_vc_lp(g).objective;
        Weight k = lp_obj;
        if (i % 3 == 1) k = lp_obj * Rational(5, 4);
        if (i % 3 == 2) k = lp_obj * Rational(3, 2);

        DecisionResult res = branch_decide(g, k);

        BenchRow row;
        char name[64];
        std::snprintf(name, sizeof name, "b%03zu-%s-n%zu", i, model_name(gen.model), gen.n);
        row.instance = name;
        row.k = k;
        row.l = fractional_count(g);
        row.nodes_expanded = res.stats.nodes_expanded;
        row.bound = std::pow(kBranchingRoot, to_double(k) + double(row.l));
        double ratio = double(row.nodes_expanded) / row.bound;
        if (ratio > result.max_ratio) result.max_ratio = ratio;
        result.rows.push_back(std::move(row));
    }
    return result;
}

// Columns: instance,k,l,nodes_expanded,bound; the final summary row carries
// the max nodes/bound ratio in the bound column.
inline std::string bench_csv(const BenchResult& result) {
    std::string out = "instance,k,l,nodes_expanded,bound\n";
    char buf[128];
    for (const BenchRow& r : result.rows) {
        std::snprintf(buf, sizeof buf, ",%zu,%llu,%.9g\n", r.l,
                      static_cast<unsigned long long>(r.nodes_expanded), r.bound);
        out += r.instance;
        out += ',';
        out += format_rational(r.k);
        out += buf;
    }
    if (!result.rows.empty()) {
        std::snprintf(buf, sizeof buf, "max_ratio,,,,%.9g\n", result.max_ratio);
        out += buf;
    }
    return out;
}

// Reads the summary row back from a committed baseline CSV.
inline double parse_bench_csv_max_ratio(std::istream& in) {
    std::string line;
    double ratio = -1.0;
    while (std::getline(in, line)) {
        if (line.rfind("max_ratio,", 0) != 0) continue;
        std::size_t last = line.rfind(',');
        ratio = std::stod(line.substr(last + 1));
    }
    if (ratio < 0) throw std::invalid_argument("no max_ratio summary row in bench CSV");
    return ratio;
}

}  // namespace wvc
