// Acceptance suite: every release criterion as one pass/fail line, exact
// rational comparisons throughout. Run from the repository root (the bench
// regression gate reads data/bench_baseline.csv). Exits non-zero on any FAIL.

#include "wvc/wvc.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace wvc;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title, const std::function<std::string()>& body) {
    std::string detail;
    try {
        detail = body();
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
        detail.insert(0, "! ");
    }
    bool failed = !detail.empty() && detail[0] == '!';
    std::cout << (failed ? "[FAIL] " : "[PASS] ") << "criterion " << number << ": " << title;
    if (!detail.empty()) std::cout << " — " << (failed ? detail.substr(2) : detail);
    std::cout << std::endl;
    if (failed) ++g_failures;
}

std::string fail(const std::string& why) { return "! " + why; }

// ---------------------------------------------------------------- corpora

struct VcCase {
    WeightedGraph g;
    Weight k = 0;
    bool yes = false;
    OracleOptimum oracle;
};

// 500 weighted graphs, n <= 10, weight denominators <= 5, budgets around the
// optimum on both sides.
const std::vector<VcCase>& vc_corpus() {
    static const std::vector<VcCase> corpus = [] {
        std::vector<VcCase> out;
        for (std::uint64_t seed = 1; seed <= 500; ++seed) {
            GeneratorConfig cfg;
            cfg.seed = seed;
            cfg.n = 2 + seed % 9;
            switch (seed % 7) {
                case 0: cfg.model = GraphModel::Star; break;
                case 1: cfg.model = GraphModel::Tree; break;
                default:
                    cfg.model = GraphModel::Gnm;
                    cfg.m = (seed * 5) % (cfg.n * (cfg.n - 1) / 2 + 1);
            }
            cfg.weight_min = Rational(1, 3);
            cfg.weight_max = 3;
            cfg.fractional_percent = 50;

            VcCase c;
            c.g = generate_weighted_graph(cfg);
            c.oracle = brute_min_vc(c.g);
            const Rational deltas[] = {Rational(-1),   Rational(-1, 2), Rational(-1, 5),
                                       Rational(0),    Rational(1, 4),  Rational(1)};
            c.k = c.oracle.optimum_weight + deltas[seed % 6];
            if (c.k < 0) c.k = 0;
            c.yes = c.oracle.optimum_weight <= c.k;
            out.push_back(std::move(c));
        }
        return out;
    }();
    return corpus;
}

WeightedGraph lp_corpus_graph(std::uint64_t seed, std::size_t max_n) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.n = 2 + seed % (max_n - 1);
    cfg.model = seed % 6 == 0 ? GraphModel::Tree : GraphModel::Gnm;
    cfg.m = (seed * 7) % (cfg.n * (cfg.n - 1) / 2 + 1);
    cfg.weight_min = Rational(1, 3);
    cfg.weight_max = 3;
    cfg.fractional_percent = 40;
    return generate_weighted_graph(cfg);
}

struct RbCase {
    RbInstance inst;
    bool expected = false;
};

const std::vector<RbCase>& rb_corpus() {
    static const std::vector<RbCase> corpus = [] {
        std::vector<RbCase> out;
        for (std::uint64_t seed = 1; seed <= 500; ++seed) {
            GeneratorConfig cfg;
            cfg.seed = seed;
            cfg.n = 1 + seed % 14;
            cfg.model = GraphModel::Tree;
            cfg.red_percent = 10 + int(seed * 13 % 80);
            RbInstance inst;
            inst.tree = generate_red_blue_tree(cfg);
            inst.K = std::int64_t(seed * 31 % (inst.tree.n + 1));
            inst.K_R = std::int64_t(seed * 17 % (inst.K + 1));
            RbCase c{std::move(inst), false};
            c.expected = brute_rb(c.inst);
            out.push_back(std::move(c));
        }
        return out;
    }();
    return corpus;
}

WeightedGraph unit_cycle(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId v = 1; v < n; ++v) edges.push_back({VertexId(v - 1), v});
    edges.push_back({0, VertexId(n - 1)});
    return make_weighted_graph(n, std::move(edges), std::vector<Weight>(n, 1));
}

// ---------------------------------------------------------------- criteria

std::string criterion_oracle_equivalence() {
    std::size_t yes = 0, no = 0;
    for (std::size_t i = 0; i < vc_corpus().size(); ++i) {
        const VcCase& c = vc_corpus()[i];
        DecisionResult r = branch_decide(c.g, c.k);
        if (r.answer != c.yes)
            return fail("answer flip on instance " + std::to_string(i) + " (k=" +
                        format_rational(c.k) + ")");
        if (r.answer) {
            ++yes;
            if (!is_vertex_cover(c.g, r.witness->vertices) || r.witness->total_weight > c.k)
                return fail("bad witness on instance " + std::to_string(i));
        } else {
            ++no;
        }
    }
    return std::to_string(vc_corpus().size()) + " instances, " + std::to_string(yes) + " YES / " +
           std::to_string(no) + " NO";
}

std::string criterion_buss_safety() {
    std::size_t reduced = 0, no_cert = 0;
    for (std::size_t i = 0; i < vc_corpus().size(); ++i) {
        const VcCase& c = vc_corpus()[i];
        KernelOutcome out = buss_kernelize(c.g, c.k);
        if (out.variant == KernelVariant::No) {
            ++no_cert;
            if (c.yes) return fail("No certificate on a YES instance " + std::to_string(i));
            continue;
        }
        ++reduced;
        if (out.remaining_budget < 0) return fail("negative budget on Reduced outcome");
        if (!out.kernel.edges.empty()) {
            Weight mw = min_weight(out.kernel);
            if (Weight(out.kernel.edges.size()) * mw * mw >
                out.remaining_budget * out.remaining_budget)
                return fail("edge bound violated on instance " + std::to_string(i));
        }
        bool kernel_yes = out.kernel.n == 0 ||
                          brute_min_vc(out.kernel).optimum_weight <= out.remaining_budget;
        if (kernel_yes != c.yes)
            return fail("kernel decision differs on instance " + std::to_string(i));
        std::vector<VertexId> lifted = out.committed;
        if (out.kernel.n > 0) {
            OracleOptimum kernel_oracle = brute_min_vc(out.kernel);
            for (VertexId v : kernel_oracle.all_optimal_covers.front())
                lifted.push_back(out.kernel_vertices[v]);
        }
        if (!is_vertex_cover(c.g, lifted))
            return fail("committed + kernel cover misses an edge on instance " + std::to_string(i));
    }
    return std::to_string(reduced) + " reduced / " + std::to_string(no_cert) + " certified No";
}

std::string criterion_lp_optimality() {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        WeightedGraph g = lp_corpus_graph(seed, 12);
        HalfIntegralSolution sol = solve_vc_lp(g);
        for (const Rational& x : sol.values)
            if (x != 0 && x != Rational(1, 2) && x != 1)
                return fail("non half-integral value on seed " + std::to_string(seed));
        for (const Edge& e : g.edges)
            if (sol.values[e.u] + sol.values[e.v] < 1)
                return fail("violated edge constraint on seed " + std::to_string(seed));
        if (sol.objective != brute_lp_half(g))
            return fail("objective differs from enumeration on seed " + std::to_string(seed));
    }
    return "300 instances, objectives exactly optimal";
}

std::string criterion_ntt_inclusion() {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        WeightedGraph g = lp_corpus_graph(seed, 10);
        NttPartition p = partition(solve_vc_lp(g));
        bool found = false;
        for (const auto& cover : brute_min_vc(g).all_optimal_covers) {
            std::vector<char> in(g.n, 0);
            for (VertexId v : cover) in[v] = 1;
            bool ok = true;
            for (VertexId v : p.v1)
                if (!in[v]) ok = false;
            for (VertexId v : p.v0)
                if (in[v]) ok = false;
            if (ok) {
                found = true;
                break;
            }
        }
        if (!found) return fail("no optimal cover between V1 and V1+Vhalf on seed " + std::to_string(seed));
    }
    return "300 instances, zero violations";
}

std::string criterion_ntt_kernel_size() {
    std::size_t checked = 0;
    for (const VcCase& c : vc_corpus()) {
        if (!c.yes || c.g.n == 0) continue;
        ++checked;
        NttPartition p = partition(solve_vc_lp(c.g));
        if (Weight(p.v_half.size()) * min_weight(c.g) > 2 * c.k)
            return fail("|Vhalf| > 2k/min(w) on a YES instance");
    }
    return std::to_string(checked) + " YES instances within the bound";
}

std::string criterion_two_approx() {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        WeightedGraph g = lp_corpus_graph(seed, 12);
        CoverSolution s = two_approx(g);
        if (!is_vertex_cover(g, s.vertices)) return fail("not a cover on seed " + std::to_string(seed));
        if (s.total_weight > 2 * brute_min_vc(g).optimum_weight)
            return fail("ratio above 2 on seed " + std::to_string(seed));
    }
    // tightness witness: odd unit cycle, optimum (n+1)/2 from the exact
    // degree-2 solver, rounded LP takes all n vertices
    WeightedGraph c21 = unit_cycle(21);
    CoverSolution approx = two_approx(c21);
    Weight opt = solve_degree_le2(c21).total_weight;
    if (opt != 11) return fail("C21 optimum expected 11, got " + format_rational(opt));
    if (approx.total_weight * 10 <= opt * 19)
        return fail("tightness witness ratio not above 1.9");
    return "300 instances within 2x; C21 ratio 21/11 > 1.9";
}

std::string criterion_degree2() {
    // every {1,3/2} pattern on paths and cycles up to n=8
    for (std::size_t n = 1; n <= 8; ++n) {
        for (std::uint32_t pattern = 0; pattern < (1u << n); ++pattern) {
            std::vector<Weight> w;
            for (std::size_t v = 0; v < n; ++v)
                w.push_back(pattern >> v & 1 ? Rational(3, 2) : Rational(1));
            std::vector<Edge> edges;
            for (VertexId v = 1; v < n; ++v) edges.push_back({VertexId(v - 1), v});
            WeightedGraph path = make_weighted_graph(n, edges, w);
            if (solve_degree_le2(path).total_weight != brute_min_vc(path).optimum_weight)
                return fail("path pattern mismatch at n=" + std::to_string(n));
            if (n >= 3) {
                edges.push_back({0, VertexId(n - 1)});
                WeightedGraph cyc = make_weighted_graph(n, edges, w);
                if (solve_degree_le2(cyc).total_weight != brute_min_vc(cyc).optimum_weight)
                    return fail("cycle pattern mismatch at n=" + std::to_string(n));
            }
        }
    }
    // 100 random rational-weight paths and cycles up to n=12
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = 1000 + seed;
        cfg.n = seed % 2 ? 1 + seed % 12 : 3 + seed % 10;
        cfg.model = seed % 2 ? GraphModel::Path : GraphModel::Cycle;
        if (cfg.model == GraphModel::Cycle && cfg.n < 3) cfg.n = 3;
        cfg.weight_min = Rational(1, 3);
        cfg.weight_max = 4;
        cfg.fractional_percent = 60;
        WeightedGraph g = generate_weighted_graph(cfg);
        CoverSolution s = solve_degree_le2(g);
        if (!is_vertex_cover(g, s.vertices)) return fail("invalid cover on seed " + std::to_string(seed));
        if (s.total_weight != brute_min_vc(g).optimum_weight)
            return fail("weight mismatch on seed " + std::to_string(seed));
    }
    return "all {1,3/2} patterns to n=8 plus 100 random instances exact";
}

std::string criterion_branch_measure() {
    BenchResult result = run_bench({});
    if (!(result.max_ratio > 0) || !std::isfinite(result.max_ratio))
        return fail("max ratio not finite and positive");
    std::ifstream baseline("data/bench_baseline.csv");
    if (!baseline.good()) return fail("data/bench_baseline.csv missing");
    double recorded = parse_bench_csv_max_ratio(baseline);
    std::ostringstream msg;
    msg << "max nodes/bound ratio " << result.max_ratio << " vs baseline " << recorded;
    if (result.max_ratio > 4.0 * recorded) return fail("regression: " + msg.str());
    return msg.str();
}

std::string criterion_rb_equivalence() {
    std::size_t yes = 0;
    for (std::size_t i = 0; i < rb_corpus().size(); ++i) {
        const RbCase& c = rb_corpus()[i];
        DecisionResult with = rb_decide(c.inst);
        DecisionResult without = rb_decide(c.inst, {.use_reductions = false});
        if (with.answer != c.expected || without.answer != c.expected)
            return fail("answer flip on tree " + std::to_string(i));
        if (with.answer) {
            ++yes;
            if (!is_vertex_cover(c.inst.tree, with.witness->vertices) ||
                std::int64_t(with.witness->vertices.size()) > c.inst.K ||
                std::int64_t(*with.witness->red_count) > c.inst.K_R)
                return fail("bad witness on tree " + std::to_string(i));
        }
    }
    return std::to_string(rb_corpus().size()) + " trees, " + std::to_string(yes) +
           " YES, reductions on/off agree";
}

std::string criterion_wrb() {
    std::size_t yes = 0;
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = 3000 + seed;
        cfg.n = 1 + seed % 14;
        cfg.model = GraphModel::Tree;
        cfg.weight_min = Rational(1, 2);
        cfg.weight_max = 3;
        cfg.fractional_percent = 40;
        cfg.red_percent = 10 + int(seed * 11 % 80);
        WrbInstance inst;
        inst.tree = generate_red_blue_tree(cfg);
        Weight total = 0, red_total = 0;
        for (VertexId v = 0; v < inst.tree.n; ++v) {
            total += inst.tree.weights[v];
            if (inst.tree.colors[v] == Color::Red) red_total += inst.tree.weights[v];
        }
        inst.k = total * Rational(1 + seed % 3, 4);
        inst.k_R = red_total * Rational(seed % 5, 5);

        bool expected = brute_wrb(inst);
        DecisionResult r = wrb_decide(inst, {.check_fronts = true});
        if (r.answer != expected) return fail("answer flip on seed " + std::to_string(seed));
        if (r.answer) {
            ++yes;
            if (!is_vertex_cover(inst.tree, r.witness->vertices) ||
                r.witness->total_weight > inst.k || *r.witness->red_weight > inst.k_R)
                return fail("bad witness on seed " + std::to_string(seed));
        }
    }
    return std::string("300 trees, ") + std::to_string(yes) +
           " YES, fronts dominance-checked after every merge";
}

std::string criterion_rb_cell_bound() {
    for (std::size_t i = 0; i < rb_corpus().size(); ++i) {
        const RbCase& c = rb_corpus()[i];
        DecisionResult r = rb_decide(c.inst);
        std::uint64_t bound = std::uint64_t(c.inst.tree.n) * 2 * std::uint64_t(c.inst.K_R + 1);
        if (r.stats.nodes_expanded > bound)
            return fail("cell count " + std::to_string(r.stats.nodes_expanded) + " above bound " +
                        std::to_string(bound) + " on tree " + std::to_string(i));
    }
    return "every table within n*2*(K_R+1) cells";
}

std::string criterion_scaling() {
    std::size_t checked = 0;
    std::uint64_t seed = 0;
    while (checked < 100) {
        ++seed;
        GeneratorConfig cfg;
        cfg.seed = 5000 + seed;
        cfg.n = 2 + seed % 9;
        cfg.model = GraphModel::Gnm;
        cfg.m = (seed * 5) % (cfg.n * (cfg.n - 1) / 2 + 1);
        cfg.weight_min = Rational(1, 2);
        cfg.weight_max = 4;
        cfg.fractional_percent = 50;
        WeightedGraph g = generate_weighted_graph(cfg);

        // w_m: smallest weight that is at least 1
        Weight w_m = 0;
        for (const Weight& w : g.weights)
            if (w >= 1 && (w_m == 0 || w < w_m)) w_m = w;
        if (w_m == 0) continue;
        ++checked;

        Weight k = brute_min_vc(g).optimum_weight + Rational(int(seed % 3) - 1, 2);
        if (k < 0) k = 0;
        auto [scaled, sk] = scale_instance(g, k, 1 / w_m);
        if (branch_decide(g, k).answer != branch_decide(scaled, sk).answer)
            return fail("scaling flipped the decision on seed " + std::to_string(seed));
        if (fractional_count_below_one(scaled) > fractional_count_below_one(g))
            return fail("scaling raised the sub-unit fractional count on seed " +
                        std::to_string(seed));
    }
    return "100 instances, decisions stable and l(<1) never grew";
}

}  // namespace

int main() {
    criterion(1, "branch_decide matches the brute-force oracle", criterion_oracle_equivalence);
    criterion(2, "buss_kernelize is answer-preserving and within the edge bound",
              criterion_buss_safety);
    criterion(3, "LP solutions are half-integral, feasible and optimal", criterion_lp_optimality);
    criterion(4, "some optimal cover lies between V1 and V1+Vhalf", criterion_ntt_inclusion);
    criterion(5, "half-valued kernel obeys |Vhalf| <= 2k/min(w)", criterion_ntt_kernel_size);
    criterion(6, "two_approx covers within twice the optimum, tight near 2", criterion_two_approx);
    criterion(7, "degree<=2 solver equals the oracle", criterion_degree2);
    criterion(8, "branching node counts stay within the measure baseline",
              criterion_branch_measure);
    criterion(9, "rb_decide matches the subset oracle with and without reductions",
              criterion_rb_equivalence);
    criterion(10, "wrb_decide matches the subset oracle with valid fronts", criterion_wrb);
    criterion(11, "rb_decide table stays within n*2*(K_R+1) cells", criterion_rb_cell_bound);
    criterion(12, "scaling by 1/w_m preserves decisions and l(<1)", criterion_scaling);

    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}
