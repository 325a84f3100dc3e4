// Command-line front end for the (n,k)-star graph toolkit.
//
// Exit codes: 0 checks passed, 1 a semantic check failed (mismatch, invalid
// witness, observed disconnection), 2 usage or I/O error, 3 result
// inconclusive (budget exhausted before completion).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "nkstar/analysis.hpp"
#include "nkstar/graph_io.hpp"

using namespace nkstar;
using ordered_json = nlohmann::ordered_json;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 0;
    std::uint64_t budget_ms = 0;
    std::uint64_t budget_nodes = 0;
    int threads = 1;
    std::string output;
    bool timing = false;

    SearchBudget budget() const {
        SearchBudget b;
        b.time_limit_ms = budget_ms;
        b.node_limit = budget_nodes;
        return b;
    }
};

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output path: " + path);
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

// strongest valid constructed upper bound for seeding the search
std::optional<SeedCut> seed_from_cliques(const StarGraph& g, int h) {
    const GraphSpec& spec = g.spec();
    if (spec.k < 2 || h < 0 || h > spec.n - spec.k) return std::nullopt;
    std::optional<SeedCut> seed;
    for (CutMode mode : {CutMode::SubClique, CutMode::FullClique}) {
        CutWitness w = construct_cut(g, h, mode);
        if (!w.valid) continue;
        int value = static_cast<int>(w.cut.size());
        if (!seed || value < seed->value) seed = SeedCut{value, w.x};
    }
    return seed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"(n,k)-star graphs: construction, explicit cuts, exact h-super edge "
                 "connectivity, and closed-form verification"};
    app.require_subcommand(1);

    GlobalOpts opts;
    app.add_option("--seed", opts.seed, "RNG seed for randomized commands")
        ->capture_default_str();
    app.add_option("--budget-ms", opts.budget_ms, "solver time budget per instance, 0 = none")
        ->capture_default_str();
    app.add_option("--budget-nodes", opts.budget_nodes,
                   "solver node budget per instance, 0 = none")
        ->capture_default_str();
    app.add_option("--threads", opts.threads, "solver worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--output", opts.output, "write result to this path instead of stdout");
    app.add_flag("--timing", opts.timing,
                 "report measured elapsed_ms in sweep output (off keeps output byte-stable)");

    int exit_code = 0;
    int n = 0, k = 0, h = 0, t = 2;

    // -h stays free for the positional; unmatched flags fall through to the
    // globals above
    auto subcommand = [&app](const char* name, const char* description) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->fallthrough();
        sub->set_help_flag("--help", "print help and exit");
        return sub;
    };

    auto* gen = subcommand("gen", "emit the canonical JSON form of S(n,k)");
    gen->add_option("n", n, "symbol count")->required();
    gen->add_option("k", k, "positions per label")->required();
    gen->callback([&] { emit(graph_to_json(StarGraph::build({n, k})), opts.output); });

    auto* info = subcommand("info", "size, degree and edge-tag summary of S(n,k)");
    info->add_option("n", n, "symbol count")->required();
    info->add_option("k", k, "positions per label")->required();
    info->callback([&] { emit(graph_info_json(StarGraph::build({n, k})), opts.output); });

    auto* dec = subcommand("decompose", "split S(n,k) along a label position");
    dec->add_option("n", n, "symbol count")->required();
    dec->add_option("k", k, "positions per label")->required();
    dec->add_option("t", t, "label position, 2..k")->required();
    dec->callback([&] {
        StarGraph g = StarGraph::build({n, k});
        emit(decomposition_to_json(g, decompose(g, t)), opts.output);
    });

    auto* cut = subcommand("cut", "build an explicit clique-anchored h-cut witness");
    std::string mode_name = "auto", alpha_text;
    cut->add_option("n", n, "symbol count")->required();
    cut->add_option("k", k, "positions per label")->required();
    cut->add_option("h", h, "degree every survivor must keep")->required();
    cut->add_option("--mode", mode_name, "sub (h+1 clique vertices), full (whole clique), or auto")
        ->check(CLI::IsMember({"sub", "full", "auto"}))
        ->capture_default_str();
    cut->add_option("--alpha", alpha_text, "trailing symbols anchoring the clique, e.g. 23");
    cut->callback([&] {
        StarGraph g = StarGraph::build({n, k});
        CutMode mode;
        if (mode_name == "auto") {
            mode = evaluate(n, k, h).branch == FormulaBranch::SmallH ? CutMode::SubClique
                                                                     : CutMode::FullClique;
        } else {
            mode = mode_name == "sub" ? CutMode::SubClique : CutMode::FullClique;
        }
        CutWitness w = alpha_text.empty()
                           ? construct_cut(g, h, mode)
                           : construct_cut(g, h, mode, parse_label(alpha_text, {n, k - 1}));
        emit(witness_to_json(g, w), opts.output);
        if (!w.valid) exit_code = 1;
    });

    auto* lam = subcommand("lambda", "classical edge connectivity via max-flow");
    lam->add_option("n", n, "symbol count")->required();
    lam->add_option("k", k, "positions per label")->required();
    lam->callback([&] {
        StarGraph g = StarGraph::build({n, k});
        ordered_json j;
        j["n"] = n;
        j["k"] = k;
        j["lambda"] = edge_connectivity(g.skeleton());
        emit(j.dump(2) + "\n", opts.output);
    });

    auto* lamh = subcommand("lambda-h", "exact h-super edge connectivity search");
    int max_size = 0;
    bool no_seed = false;
    lamh->add_option("n", n, "symbol count")->required();
    lamh->add_option("k", k, "positions per label")->required();
    lamh->add_option("h", h, "degree every survivor must keep")->required();
    lamh->add_option("--max-size", max_size, "cap on |X|; below |V|/2 degrades to a probe")
        ->capture_default_str();
    lamh->add_flag("--no-seed", no_seed, "start without the constructed upper bound");
    lamh->callback([&] {
        StarGraph g = StarGraph::build({n, k});
        SearchBudget budget = opts.budget();
        budget.max_subset_size = max_size;
        std::optional<SeedCut> seed;
        if (!no_seed) seed = seed_from_cliques(g, h);
        SolverResult r = lambda_h_exact(g.skeleton(), h, budget, opts.threads, seed);
        emit(solver_result_to_json(g, r), opts.output);
        if (!r.exact) exit_code = 3;
    });

    auto* verify = subcommand(
        "verify", "sweep the (n,k,h) lattice: closed form vs exact solver, CSV report");
    int n_max = 5, max_vertices = 60;
    std::string json_path;
    verify->add_option("--n-max", n_max, "largest n in the sweep")
        ->check(CLI::Range(3, 20))
        ->capture_default_str();
    verify->add_option("--max-vertices", max_vertices, "skip instances with more vertices")
        ->capture_default_str();
    verify->add_option("--json", json_path, "also write the full JSON report here");
    verify->callback([&] {
        SweepOptions sweep;
        sweep.n_max = n_max;
        sweep.max_vertices = max_vertices;
        sweep.budget = opts.budget();
        sweep.threads = opts.threads;
        sweep.timing = opts.timing;
        SweepReport report = run_verify_sweep(sweep);
        emit(sweep_to_csv(report), opts.output);
        if (!json_path.empty()) emit(sweep_to_json(report), json_path);
        exit_code = report.exit_code();
    });

    auto* l28 = subcommand(
        "lemma28", "split an optimal h-cut across parts and check each split part");
    l28->add_option("n", n, "symbol count")->required();
    l28->add_option("k", k, "positions per label (k >= 3)")->required();
    l28->add_option("h", h, "degree every survivor must keep (h >= 1)")->required();
    l28->add_option("t", t, "label position to decompose along, 2..k")->capture_default_str();
    l28->callback([&] {
        StarGraph g = StarGraph::build({n, k});
        CutSplitReport rep = check_cut_split(g, h, t, opts.budget(), opts.threads);
        emit(cut_split_to_json(g, rep), opts.output);
        if (!rep.all_parts_pass) exit_code = 1;
    });

    auto* fault = subcommand(
        "fault-trial", "random faults one short of the closed form must never disconnect "
                       "a survivor that keeps degree h");
    int trials = 1000;
    fault->add_option("n", n, "symbol count")->required();
    fault->add_option("k", k, "positions per label")->required();
    fault->add_option("h", h, "degree every survivor must keep")->required();
    fault->add_option("--trials", trials, "number of random edge sets")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    fault->callback([&] {
        StarGraph g = StarGraph::build({n, k});
        FaultTrialReport report = run_fault_trial(g, h, trials, opts.seed);
        emit(fault_trial_to_json(report), opts.output);
        if (report.disconnected != 0) exit_code = 1;
    });

    auto* exp = subcommand("export", "write S(n,k) as dot, json, or csv-edges");
    std::string format = "json";
    exp->add_option("n", n, "symbol count")->required();
    exp->add_option("k", k, "positions per label")->required();
    exp->add_option("--format", format, "dot | json | csv-edges")
        ->check(CLI::IsMember({"dot", "json", "csv-edges"}))
        ->capture_default_str();
    exp->callback([&] {
        StarGraph g = StarGraph::build({n, k});
        std::string text = format == "dot"       ? graph_to_dot(g)
                           : format == "json"    ? graph_to_json(g)
                                                 : graph_to_csv_edges(g);
        emit(text, opts.output);
    });

    app.set_help_flag("--help", "print help and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // help exits clean, anything else is usage
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
