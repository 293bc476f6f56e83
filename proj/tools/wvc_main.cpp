// wvc: weighted vertex cover toolkit CLI.
// Exit codes: 0 = YES / success, 1 = NO, 2 = error.

#include "wvc/wvc.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using json = nlohmann::json;
using namespace wvc;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json rat(const Weight& w) { return format_rational(w); }

json ids(const std::vector<VertexId>& vs) {
    json arr = json::array();
    for (VertexId v : vs) arr.push_back(v);
    return arr;
}

json witness_json(const CoverSolution& s) {
    json w;
    w["vertices"] = ids(s.vertices);
    w["total_weight"] = rat(s.total_weight);
    if (s.red_weight) w["red_weight"] = rat(*s.red_weight);
    if (s.red_count) w["red_count"] = *s.red_count;
    return w;
}

json stats_json(const BranchStats& s) {
    json j;
    j["nodes_expanded"] = s.nodes_expanded;
    j["initial_k"] = rat(s.initial_k);
    j["initial_l"] = s.initial_l;
    j["initial_l_below_one"] = s.initial_l_below_one;
    return j;
}

class Timer {
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();

public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }
};

void emit(json& report, const Timer& timer) {
    report["wall_time_ms"] = timer.ms();
    std::cout << report.dump(2) << std::endl;
}

json base_report(const std::string& subcommand, const std::string& instance) {
    json j;
    j["instance_id"] = instance;
    j["subcommand"] = subcommand;
    return j;
}

json kernel_json(const KernelOutcome& out) {
    json j;
    j["outcome"] = out.is_no() ? "no" : "reduced";
    j["committed"] = ids(out.committed);
    j["removed"] = ids(out.removed_isolated);
    j["remaining_budget"] = rat(out.remaining_budget);
    if (!out.is_no()) {
        j["kernel"] = {{"n", out.kernel.n}, {"m", out.kernel.edges.size()}};
        j["kernel_vertices"] = ids(out.kernel_vertices);
    }
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"weighted vertex cover toolkit"};
    app.require_subcommand(1);

    std::string file = "-";
    std::string k_text, kr_text, scale_text = "none";
    std::int64_t big_k = -1, big_kr = -1;
    bool stats_flag = false, no_reductions = false;
    std::string out_path, kernel_out;

    auto add_instance_arg = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "instance file, '-' for stdin");
    };

    CLI::App* solve = app.add_subcommand("solve", "exact branching decision for weighted VC");
    add_instance_arg(solve);
    solve->add_option("--k", k_text, "weight budget (rational)")->required();
    solve->add_flag("--stats", stats_flag, "include node counts and measures");
    solve->add_option("--scale", scale_text, "auto | none | <rational factor>");

    CLI::App* kbuss = app.add_subcommand("kernel-buss", "exhaustive isolated + heavy-neighborhood kernel");
    add_instance_arg(kbuss);
    kbuss->add_option("--k", k_text, "weight budget (rational)")->required();
    kbuss->add_option("--kernel-out", kernel_out, "write the kernel instance to a file");

    CLI::App* kntt = app.add_subcommand("kernel-ntt", "LP-based kernel on the half-valued vertices");
    add_instance_arg(kntt);
    kntt->add_option("--k", k_text, "weight budget (rational)")->required();
    kntt->add_option("--kernel-out", kernel_out, "write the kernel instance to a file");

    CLI::App* lp = app.add_subcommand("lp", "half-integral optimum of the LP relaxation");
    add_instance_arg(lp);

    CLI::App* approx = app.add_subcommand("approx2", "rounded LP 2-approximation");
    add_instance_arg(approx);

    CLI::App* redblue = app.add_subcommand("redblue", "red-blue vertex cover on trees");
    add_instance_arg(redblue);
    redblue->add_option("--K", big_k, "cover size budget (unweighted variant)");
    redblue->add_option("--KR", big_kr, "red count budget (unweighted variant)");
    redblue->add_option("--k", k_text, "total weight budget (weighted variant)");
    redblue->add_option("--kr", kr_text, "red weight budget (weighted variant)");
    redblue->add_flag("--no-reductions", no_reductions, "skip the forcing reductions (dp only)");

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force cross-checks");
    add_instance_arg(oracle);
    std::string mode;
    oracle->add_option("--mode", mode, "vc | lp | rb | wrb")->required();
    oracle->add_option("--k", k_text, "budget for vc (optional) / wrb");
    oracle->add_option("--kr", kr_text, "red weight budget for wrb");
    oracle->add_option("--K", big_k, "size budget for rb");
    oracle->add_option("--KR", big_kr, "red count budget for rb");

    CLI::App* gen = app.add_subcommand("gen", "deterministic instance generator");
    GeneratorConfig gen_cfg;
    std::string model_text = "gnm", wmin_text = "1", wmax_text = "1";
    gen->add_option("--seed", gen_cfg.seed, "rng seed");
    gen->add_option("--n", gen_cfg.n, "vertex count")->required();
    gen->add_option("--model", model_text, "gnm | tree | path | cycle | star");
    gen->add_option("--m", gen_cfg.m, "edge count (gnm)");
    gen->add_option("--wmin", wmin_text, "minimum weight (rational)");
    gen->add_option("--wmax", wmax_text, "maximum weight (rational)");
    gen->add_option("--frac-percent", gen_cfg.fractional_percent,
                    "share of vertices with fractional weights, 0..100");
    gen->add_option("--red-percent", gen_cfg.red_percent,
                    "share of red vertices, 0..100; omit for uncolored");
    gen->add_option("-o,--out", out_path, "output file (default stdout)");

    CLI::App* bench = app.add_subcommand("bench", "branching node counts vs the 1.4656^(k+l) measure");
    BenchConfig bench_cfg;
    bench->add_option("--seed", bench_cfg.seed, "suite seed");
    bench->add_option("--count", bench_cfg.count, "number of instances");
    bench->add_option("-o,--out", out_path, "output CSV (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Timer timer;

    if (solve->parsed()) {
        WeightedGraph g = to_weighted_graph(parse_instance(read_input(file)));
        Weight k = parse_rational(k_text);
        json report = base_report("solve", file);

        Weight factor = 1;
        if (scale_text == "auto") {
            if (g.n == 0) {
                factor = 1;
            } else {
                std::vector<Weight> ws = g.weights;
                std::sort(ws.begin(), ws.end());
                ScalingChoice choice = best_scaling(ws, k);
                factor = 1 / ws[choice.index - 1];
                report["scale"] = {{"factor", rat(factor)},
                                   {"selector_index", choice.index},
                                   {"selector_value", rat(choice.value)},
                                   {"below_one_fallback", choice.below_one_fallback}};
            }
        } else if (scale_text != "none") {
            factor = parse_rational(scale_text);
            report["scale"] = {{"factor", rat(factor)}};
        }
        auto [solved_g, solved_k] = scale_instance(g, k, factor);

        DecisionResult r = branch_decide(solved_g, solved_k);
        report["answer"] = r.answer;
        report["k"] = rat(k);
        if (factor != 1) report["k_scaled"] = rat(solved_k);
        if (r.witness) report["witness"] = witness_json(make_cover_solution(g, r.witness->vertices));
        if (stats_flag) report["stats"] = stats_json(r.stats);
        emit(report, timer);
        return r.answer ? 0 : 1;
    }

    if (kbuss->parsed() || kntt->parsed()) {
        bool buss = kbuss->parsed();
        WeightedGraph g = to_weighted_graph(parse_instance(read_input(file)));
        Weight k = parse_rational(k_text);
        KernelOutcome out = buss ? buss_kernelize(g, k) : ntt_kernelize(g, k);
        json report = base_report(buss ? "kernel-buss" : "kernel-ntt", file);
        report.update(kernel_json(out));
        if (!out.is_no() && !kernel_out.empty()) {
            std::ofstream f(kernel_out, std::ios::binary);
            f << serialize(out.kernel);
        }
        emit(report, timer);
        return out.is_no() ? 1 : 0;
    }

    if (lp->parsed()) {
        WeightedGraph g = to_weighted_graph(parse_instance(read_input(file)));
        HalfIntegralSolution sol = solve_vc_lp(g);
        NttPartition p = partition(sol);
        json report = base_report("lp", file);
        report["objective"] = rat(sol.objective);
        json values = json::array();
        for (const Rational& x : sol.values) values.push_back(format_rational(x));
        report["values"] = values;
        report["v0"] = ids(p.v0);
        report["v1"] = ids(p.v1);
        report["v_half"] = ids(p.v_half);
        emit(report, timer);
        return 0;
    }

    if (approx->parsed()) {
        WeightedGraph g = to_weighted_graph(parse_instance(read_input(file)));
        CoverSolution s = two_approx(g);
        json report = base_report("approx2", file);
        report["cover"] = witness_json(s);
        emit(report, timer);
        return 0;
    }

    if (redblue->parsed()) {
        RedBlueTree t = to_red_blue_tree(parse_instance(read_input(file)));
        bool unweighted = redblue->count("--K") || redblue->count("--KR");
        bool weighted = !k_text.empty() || !kr_text.empty();
        if (unweighted == weighted)
            throw std::runtime_error("pass either --K/--KR (counts) or --k/--kr (weights)");

        json report = base_report("redblue", file);
        DecisionResult r;
        if (unweighted) {
            if (big_k < 0 || big_kr < 0) throw std::runtime_error("--K and --KR are both required");
            r = rb_decide({t, big_k, big_kr}, {.use_reductions = !no_reductions});
            report["K"] = big_k;
            report["KR"] = big_kr;
        } else {
            if (k_text.empty() || kr_text.empty())
                throw std::runtime_error("--k and --kr are both required");
            r = wrb_decide({t, parse_rational(k_text), parse_rational(kr_text)});
            report["k"] = k_text;
            report["kr"] = kr_text;
        }
        report["answer"] = r.answer;
        if (r.witness) report["witness"] = witness_json(*r.witness);
        report["stats"] = stats_json(r.stats);
        emit(report, timer);
        return r.answer ? 0 : 1;
    }

    if (oracle->parsed()) {
        json report = base_report("oracle", file);
        report["mode"] = mode;
        int code = 0;
        std::string text = read_input(file);
        if (mode == "vc") {
            WeightedGraph g = to_weighted_graph(parse_instance(text));
            OracleOptimum o = brute_min_vc(g);
            report["optimum"] = rat(o.optimum_weight);
            report["optimal_cover_count"] = o.all_optimal_covers.size();
            report["witness"] = ids(o.all_optimal_covers.front());
            if (!k_text.empty()) {
                bool yes = o.optimum_weight <= parse_rational(k_text);
                report["answer"] = yes;
                code = yes ? 0 : 1;
            }
        } else if (mode == "lp") {
            WeightedGraph g = to_weighted_graph(parse_instance(text));
            report["objective"] = rat(brute_lp_half(g));
        } else if (mode == "rb") {
            if (big_k < 0 || big_kr < 0) throw std::runtime_error("--K and --KR are required");
            bool yes = brute_rb({to_red_blue_tree(parse_instance(text)), big_k, big_kr});
            report["answer"] = yes;
            code = yes ? 0 : 1;
        } else if (mode == "wrb") {
            if (k_text.empty() || kr_text.empty())
                throw std::runtime_error("--k and --kr are required");
            bool yes = brute_wrb({to_red_blue_tree(parse_instance(text)), parse_rational(k_text),
                                  parse_rational(kr_text)});
            report["answer"] = yes;
            code = yes ? 0 : 1;
        } else {
            throw std::runtime_error("unknown oracle mode '" + mode + "'");
        }
        emit(report, timer);
        return code;
    }

    if (gen->parsed()) {
        gen_cfg.model = parse_model(model_text);
        gen_cfg.weight_min = parse_rational(wmin_text);
        gen_cfg.weight_max = parse_rational(wmax_text);
        std::string text = generate(gen_cfg);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            f << text;
        }
        return 0;
    }

    if (bench->parsed()) {
        BenchResult result = run_bench(bench_cfg);
        std::string csv = bench_csv(result);
        if (out_path.empty()) {
            std::cout << csv;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            f << csv;
        }
        std::cerr << "max nodes/bound ratio: " << result.max_ratio << "\n";
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
