#include "nkstar/analysis.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace nkstar {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json witness_obj(const StarGraph& g, const CutWitness& w) {
    return ordered_json::parse(witness_to_json(g, w));
}

// strongest valid constructed upper bound, if any mode yields one
std::optional<SeedCut> best_seed(const StarGraph& g, int h) {
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

std::string solver_result_to_json(const StarGraph& g, const SolverResult& r) {
    ordered_json j;
    j["value"] = r.value ? ordered_json(*r.value) : ordered_json(nullptr);
    j["exact"] = r.exact;
    j["nodesExplored"] = r.nodes_explored;
    j["elapsedMs"] = r.elapsed_ms;
    j["witness"] = r.witness ? witness_obj(g, *r.witness) : ordered_json(nullptr);
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

CutPartAnalysis analyze_cut_parts(const StarGraph& g, const DecompositionView& view,
                                  const CutWitness& w) {
    const int n = g.spec().n;
    CutPartAnalysis a;
    a.t = view.t;
    a.x_parts.resize(n);
    a.y_parts.resize(n);
    a.internal_cut.resize(n);
    a.cross_cut.assign(n, std::vector<std::vector<Edge>>(n));

    std::vector<char> in_x(g.vertex_count(), 0);
    for (int v : w.x) in_x.at(v) = 1;
    auto symbol_of = [&](int v) { return g.label(v)[view.t - 1]; };

    for (int v = 0; v < g.vertex_count(); ++v) {
        (in_x[v] ? a.x_parts : a.y_parts)[symbol_of(v) - 1].push_back(v);
    }
    for (const auto& [u, v] : w.cut) {
        int su = symbol_of(u), sv = symbol_of(v);
        if (su == sv) {
            a.internal_cut[su - 1].emplace_back(u, v);
            ++a.internal_total;
        } else {
            a.cross_cut[std::min(su, sv) - 1][std::max(su, sv) - 1].emplace_back(u, v);
            ++a.cross_total;
        }
    }
    for (int s = 1; s <= n; ++s) {
        bool has_x = !a.x_parts[s - 1].empty();
        bool has_y = !a.y_parts[s - 1].empty();
        if (has_x) a.j_set.push_back(s);
        if (has_y) a.t_set.push_back(s);
        if (has_x && has_y) a.j_prime.push_back(s);
    }
    return a;
}

CutSplitReport check_cut_split(const StarGraph& g, int h, int t, const SearchBudget& budget,
                               int threads) {
    const GraphSpec& spec = g.spec();
    if (spec.k < 3) {
        throw std::domain_error("check_cut_split: requires k >= 3, got k=" +
                                std::to_string(spec.k));
    }
    if (h < 1 || h > spec.n - spec.k) {
        throw std::domain_error("check_cut_split: h must satisfy 1 <= h <= n-k, got h=" +
                                std::to_string(h));
    }
    DecompositionView view = decompose(g, t);

    CutSplitReport rep;
    rep.spec = spec;
    rep.h = h;
    rep.t = t;
    rep.solved = lambda_h_exact(g.skeleton(), h, budget, threads, best_seed(g, h));
    if (!rep.solved.witness) {
        throw std::runtime_error("check_cut_split: no cut found within budget");
    }
    const CutWitness& w = *rep.solved.witness;

    CutPartAnalysis a = analyze_cut_parts(g, view, w);
    rep.j_set = a.j_set;
    rep.j_prime = a.j_prime;
    rep.t_set = a.t_set;

    bool all = true;
    for (int s : a.j_prime) {
        PartEmbedding emb = part_as_star(g, view, s);
        std::vector<Edge> mapped;
        mapped.reserve(a.internal_cut[s - 1].size());
        for (const auto& [u, v] : a.internal_cut[s - 1]) {
            mapped.emplace_back(emb.sub_of[u], emb.sub_of[v]);
        }
        rep.internal_total += mapped.size();

        PartCutVerdict verdict;
        verdict.symbol = s;
        verdict.cut_size = static_cast<int>(mapped.size());
        if (mapped.empty()) {
            // no internal cut edges cannot disconnect the part
            verdict.components = 1;
            verdict.is_cut = false;
        } else {
            CutCheck check = verify_h_edge_cut(emb.sub.skeleton(), mapped, h - 1);
            verdict.components = check.witness.components;
            verdict.is_cut = check.witness.valid;
        }
        all = all && verdict.is_cut;
        rep.verdicts.push_back(verdict);
    }
    rep.accounting_ok = w.cut.size() >= rep.internal_total;
    rep.all_parts_pass = all && rep.accounting_ok;
    return rep;
}

std::string cut_split_to_json(const StarGraph& g, const CutSplitReport& rep) {
    ordered_json j;
    j["n"] = rep.spec.n;
    j["k"] = rep.spec.k;
    j["h"] = rep.h;
    j["t"] = rep.t;
    j["solver"] = ordered_json::parse(solver_result_to_json(g, rep.solved));
    j["J"] = rep.j_set;
    j["Jprime"] = rep.j_prime;
    j["T"] = rep.t_set;
    auto parts = ordered_json::array();
    for (const auto& v : rep.verdicts) {
        parts.push_back({{"symbol", v.symbol},
                         {"cutSize", v.cut_size},
                         {"components", v.components},
                         {"isCut", v.is_cut}});
    }
    j["parts"] = std::move(parts);
    j["internalCutTotal"] = rep.internal_total;
    j["cutSize"] = rep.solved.witness ? rep.solved.witness->cut.size() : 0;
    j["accountingOk"] = rep.accounting_ok;
    j["allPartsPass"] = rep.all_parts_pass;
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

int SweepReport::exit_code() const {
    if (mismatches > 0) return 1;
    if (inconclusive > 0) return 3;
    return 0;
}

SweepReport run_verify_sweep(const SweepOptions& options) {
    if (options.n_max < 3) {
        throw std::invalid_argument("run_verify_sweep: n_max must be >= 3, got " +
                                    std::to_string(options.n_max));
    }
    SweepReport report;
    report.options = options;
    for (int n = 3; n <= options.n_max; ++n) {
        for (int k = 2; k <= n - 1; ++k) {
            if (num_vertices({n, k}) > static_cast<std::uint64_t>(options.max_vertices)) continue;
            StarGraph g = StarGraph::build({n, k});
            for (int h = 0; h <= n - k; ++h) {
                FormulaResult f = evaluate(n, k, h);
                SolverResult r = lambda_h_exact(g.skeleton(), h, options.budget,
                                                options.threads, best_seed(g, h));
                SweepRow row;
                row.n = n;
                row.k = k;
                row.h = h;
                row.theorem_value = f.theorem_value;
                row.solver_value = r.value;
                row.exact = r.exact;
                row.match = r.exact && r.value && *r.value == f.theorem_value;
                row.elapsed_ms = options.timing ? r.elapsed_ms : 0;
                row.witness = r.witness;
                if (r.exact && !row.match) ++report.mismatches;
                if (!r.exact) ++report.inconclusive;
                report.rows.push_back(std::move(row));
            }
        }
    }
    return report;
}

std::string sweep_to_csv(const SweepReport& report) {
    std::ostringstream out;
    out << "n,k,h,theorem_value,solver_value,exact,match,elapsed_ms\n";
    for (const auto& row : report.rows) {
        out << row.n << ',' << row.k << ',' << row.h << ',' << row.theorem_value << ',';
        if (row.solver_value) out << *row.solver_value;
        out << ',' << (row.exact ? "true" : "false") << ',' << (row.match ? "true" : "false")
            << ',' << row.elapsed_ms << '\n';
    }
    return out.str();
}

std::string sweep_to_json(const SweepReport& report) {
    ordered_json j;
    j["nMax"] = report.options.n_max;
    j["maxVertices"] = report.options.max_vertices;
    auto rows = ordered_json::array();
    for (const auto& row : report.rows) {
        ordered_json r;
        r["n"] = row.n;
        r["k"] = row.k;
        r["h"] = row.h;
        r["theoremValue"] = row.theorem_value;
        r["solverValue"] = row.solver_value ? ordered_json(*row.solver_value) : ordered_json(nullptr);
        r["exact"] = row.exact;
        r["match"] = row.match;
        r["elapsedMs"] = row.elapsed_ms;
        if (row.witness) {
            StarGraph g = StarGraph::build({row.n, row.k});
            r["witness"] = witness_obj(g, *row.witness);
        } else {
            r["witness"] = nullptr;
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    j["mismatches"] = report.mismatches;
    j["inconclusive"] = report.inconclusive;
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

namespace {

// unbiased draw from [0, bound) by rejection; mt19937_64 output is portable
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace

std::vector<Edge> sample_edges(const SimpleGraph& g, int count, std::mt19937_64& rng) {
    std::vector<Edge> pool = g.edges();
    if (count < 0 || static_cast<std::size_t>(count) > pool.size()) {
        throw std::invalid_argument("sample_edges: count " + std::to_string(count) +
                                    " outside 0.." + std::to_string(pool.size()));
    }
    // partial Fisher-Yates: the first `count` slots become the sample
    for (int i = 0; i < count; ++i) {
        std::size_t j = i + uniform_below(rng, pool.size() - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    return pool;
}

FaultTrialReport run_fault_trial(const StarGraph& g, int h, int trials, std::uint64_t seed) {
    if (trials < 1) {
        throw std::invalid_argument("run_fault_trial: trials must be >= 1, got " +
                                    std::to_string(trials));
    }
    const GraphSpec& spec = g.spec();
    FormulaResult f = evaluate(spec.n, spec.k, h);  // validates the (n,k,h) range

    FaultTrialReport report;
    report.n = spec.n;
    report.k = spec.k;
    report.h = h;
    report.theorem_value = f.theorem_value;
    report.sample_size = static_cast<int>(f.theorem_value) - 1;
    report.trials = trials;
    report.seed = seed;

    const SimpleGraph& sk = g.skeleton();
    std::mt19937_64 rng(seed);
    std::vector<int> deg(sk.vertex_count());
    std::vector<int> stack;
    std::vector<char> visited(sk.vertex_count());
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<Edge> removed = sample_edges(sk, report.sample_size, rng);
        for (int v = 0; v < sk.vertex_count(); ++v) deg[v] = sk.degree(v);
        for (const auto& [u, v] : removed) {
            --deg[u];
            --deg[v];
        }
        if (*std::min_element(deg.begin(), deg.end()) < h) continue;
        ++report.qualifying;

        auto gone = [&removed](int u, int v) {
            if (u > v) std::swap(u, v);
            return std::binary_search(removed.begin(), removed.end(), Edge{u, v});
        };
        std::fill(visited.begin(), visited.end(), 0);
        stack.assign(1, 0);
        visited[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : sk.adj[u]) {
                if (!visited[v] && !gone(u, v)) {
                    visited[v] = 1;
                    ++reached;
                    stack.push_back(v);
                }
            }
        }
        if (reached != sk.vertex_count()) ++report.disconnected;
    }
    return report;
}

std::string fault_trial_to_json(const FaultTrialReport& report) {
    ordered_json j;
    j["n"] = report.n;
    j["k"] = report.k;
    j["h"] = report.h;
    j["theoremValue"] = report.theorem_value;
    j["sampleSize"] = report.sample_size;
    j["trials"] = report.trials;
    j["seed"] = report.seed;
    j["qualifying"] = report.qualifying;
    j["disconnected"] = report.disconnected;
    return j.dump(2) + "\n";
}

}  // namespace nkstar
