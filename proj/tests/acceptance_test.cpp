// Acceptance suite: one test per shipped guarantee, each ending in a single
// "[criterion N] ...: PASS/FAIL" line. Tolerances are pinned here as
// constants; every comparison below them is exact integer or byte equality.

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nkstar/analysis.hpp"
#include "nkstar/cut.hpp"
#include "nkstar/decomposition.hpp"
#include "nkstar/formula.hpp"
#include "nkstar/solver.hpp"
#include "nkstar/star_graph.hpp"

namespace nkstar {
namespace {

// Per-instance time budgets. Desk-scale instances finish in well under a
// second; the caps only bound pathological regressions.
constexpr std::uint64_t kDeskTimeBudgetMs = 10ull * 60 * 1000;     // 10 minutes
constexpr std::uint64_t kStretchTimeBudgetMs = 30ull * 60 * 1000;  // 30 minutes

void report(int criterion, const char* what, bool ok) {
    std::printf("[criterion %d] %s: %s\n", criterion, what, ok ? "PASS" : "FAIL");
    std::fflush(stdout);
}

std::optional<SeedCut> best_construction(const StarGraph& g, int h) {
    std::optional<SeedCut> best;
    for (CutMode mode : {CutMode::SubClique, CutMode::FullClique}) {
        CutWitness w = construct_cut(g, h, mode);
        if (!w.valid) continue;
        int value = static_cast<int>(w.cut.size());
        if (!best || value < best->value) best = SeedCut{value, w.x};
    }
    return best;
}

// d-regular graph on V vertices via the pairing model, resampled until
// simple; uniform over simple outcomes and deterministic per generator state.
SimpleGraph random_regular_graph(int V, int d, std::mt19937_64& rng) {
    std::vector<int> stubs;
    for (;;) {
        stubs.clear();
        for (int v = 0; v < V; ++v) {
            for (int i = 0; i < d; ++i) stubs.push_back(v);
        }
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::set<std::pair<int, int>> edges;
        bool simple = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            simple = u != v && edges.insert(std::minmax(u, v)).second;
        }
        if (!simple) continue;
        SimpleGraph g;
        g.adj.resize(V);
        for (auto [u, v] : edges) {
            g.adj[u].push_back(v);
            g.adj[v].push_back(u);
        }
        for (auto& row : g.adj) std::sort(row.begin(), row.end());
        return g;
    }
}

std::uint64_t falling_factorial(int n, int k) {
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r *= static_cast<std::uint64_t>(n - i);
    return r;
}

TEST(Acceptance, Criterion1ClosedFormValues) {
    // Unfaulted case: plain edge connectivity n-1.
    for (int n = 3; n <= 20; ++n) {
        for (int k = 2; k <= n - 1; ++k) {
            EXPECT_EQ(evaluate(n, k, 0).theorem_value, n - 1) << n << "," << k;
        }
    }
    // k = 2 stays at n-1 for every admissible h.
    for (int n = 3; n <= 20; ++n) {
        for (int h = 0; h <= n - 2; ++h) {
            EXPECT_EQ(evaluate(n, 2, h).theorem_value, n - 1) << n << "," << h;
        }
    }
    // Classical star graph (k = n-1) with one guarded fault: 2n-4.
    for (int n = 3; n <= 20; ++n) {
        EXPECT_EQ(evaluate(n, n - 1, 1).theorem_value, 2 * n - 4) << n;
    }
    // Branch structure over the whole supported lattice.
    for (int n = 3; n <= 20; ++n) {
        for (int k = 2; k <= n - 1; ++k) {
            for (int h = 0; h <= n - k; ++h) {
                FormulaResult r = evaluate(n, k, h);
                bool small_h = h <= k - 2 && 2 * h <= n - 2;
                EXPECT_EQ(r.theorem_value,
                          small_h ? std::int64_t{n - h - 1} * (h + 1)
                                  : std::int64_t{n - k + 1} * (k - 1));
                EXPECT_EQ(r.psi, std::min(r.clique_side_value, r.split_value));
                EXPECT_EQ(r.omega, std::max(r.clique_side_value, r.split_value));
            }
        }
    }
    // Frozen spot values.
    EXPECT_EQ(evaluate(5, 3, 1).theorem_value, 6);
    EXPECT_EQ(evaluate(5, 3, 2).theorem_value, 6);
    EXPECT_EQ(evaluate(6, 3, 2).theorem_value, 8);
    EXPECT_EQ(evaluate(7, 3, 1).theorem_value, 10);
    report(1, "closed-form cut values reproduced exactly", !HasFailure());
}

TEST(Acceptance, Criterion2SolverMatchesFormulaInRange) {
    SearchBudget desk;
    desk.time_limit_ms = kDeskTimeBudgetMs;
    for (int n = 3; n <= 6; ++n) {
        for (int k = 2; k <= n - 1; ++k) {
            if (num_vertices({n, k}) > 60) continue;
            StarGraph g = StarGraph::build({n, k});
            for (int h = 0; h <= n - k; ++h) {
                SolverResult r =
                    lambda_h_exact(g.skeleton(), h, desk, 1, best_construction(g, h));
                EXPECT_TRUE(r.exact) << n << "," << k << "," << h;
                EXPECT_TRUE(r.value.has_value()) << n << "," << k << "," << h;
                if (r.value) {
                    EXPECT_EQ(*r.value, evaluate(n, k, h).theorem_value)
                        << n << "," << k << "," << h;
                }
            }
        }
    }
    // Stretch instances (120 vertices): accepted exact, or inconclusive with
    // the best found value already at the predicted optimum.
    SearchBudget stretch;
    stretch.time_limit_ms = kStretchTimeBudgetMs;
    for (auto [n, k] : {std::pair{5, 4}, {6, 3}}) {
        StarGraph g = StarGraph::build({n, k});
        for (int h = 0; h <= n - k; ++h) {
            SolverResult r =
                lambda_h_exact(g.skeleton(), h, stretch, 1, best_construction(g, h));
            EXPECT_TRUE(r.value.has_value()) << n << "," << k << "," << h;
            if (r.value) {
                EXPECT_EQ(*r.value, evaluate(n, k, h).theorem_value)
                    << n << "," << k << "," << h << (r.exact ? "" : " (inconclusive)");
            }
        }
    }
    report(2, "search equals the predicted value on every in-range instance",
           !HasFailure());
}

TEST(Acceptance, Criterion3PrunedSearchEqualsBruteforce) {
    // Every star graph instance with at most 30 vertices...
    std::vector<SimpleGraph> corpus;
    for (int n = 2; n <= 6; ++n) {
        for (int k = 1; k <= n - 1; ++k) {
            if (num_vertices({n, k}) > 30) continue;
            corpus.push_back(StarGraph::build({n, k}).skeleton());
        }
    }
    // ...plus 20 random 4-regular graphs on 16 vertices.
    std::mt19937_64 rng(20260814);
    for (int i = 0; i < 20; ++i) corpus.push_back(random_regular_graph(16, 4, rng));

    for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
        for (int h = 0; h <= 4; ++h) {
            SolverResult fast = lambda_h_exact(corpus[gi], h);
            SolverResult slow = lambda_h_bruteforce(corpus[gi], h);
            EXPECT_TRUE(fast.exact && slow.exact);
            EXPECT_EQ(fast.value.has_value(), slow.value.has_value())
                << "graph " << gi << " h=" << h;
            if (fast.value && slow.value) {
                EXPECT_EQ(*fast.value, *slow.value) << "graph " << gi << " h=" << h;
                EXPECT_EQ(fast.witness->x, slow.witness->x) << "graph " << gi << " h=" << h;
            }
        }
    }
    report(3, "pruned search agrees with bruteforce on the whole corpus", !HasFailure());
}

TEST(Acceptance, Criterion4ConstructedCutsAreValidWithPredictedSizes) {
    for (int n = 3; n <= 6; ++n) {
        for (int k = 2; k <= n - 1; ++k) {
            StarGraph g = StarGraph::build({n, k});
            for (int h = 0; h <= n - k; ++h) {
                FormulaResult f = evaluate(n, k, h);
                if (2 * h <= n - 2) {
                    CutWitness sub = construct_cut(g, h, CutMode::SubClique);
                    EXPECT_TRUE(sub.valid) << n << "," << k << "," << h;
                    EXPECT_EQ(sub.cut.size(),
                              static_cast<std::size_t>(f.clique_side_value));
                }
                CutWitness full = construct_cut(g, h, CutMode::FullClique);
                EXPECT_TRUE(full.valid) << n << "," << k << "," << h;
                EXPECT_EQ(full.cut.size(), static_cast<std::size_t>(f.split_value));
            }
        }
    }
    report(4, "explicit cut constructions verify at their closed-form sizes",
           !HasFailure());
}

TEST(Acceptance, Criterion5StructuralDecomposition) {
    for (int n = 3; n <= 6; ++n) {
        for (int k = 1; k <= n - 1; ++k) {
            StarGraph g = StarGraph::build({n, k});

            // counts, regularity, edge-rule tags
            EXPECT_EQ(static_cast<std::uint64_t>(g.vertex_count()), falling_factorial(n, k));
            for (int v = 0; v < g.vertex_count(); ++v) {
                EXPECT_EQ(g.skeleton().degree(v), n - 1);
                int swaps = 0, unswaps = 0;
                for (const TaggedNeighbor& nb : g.neighbors(v)) {
                    (nb.tag.kind == EdgeKind::Swap ? swaps : unswaps)++;
                }
                EXPECT_EQ(swaps, k - 1);
                EXPECT_EQ(unswaps, n - k);
            }

            // cliques partition the graph with at most one edge between two
            std::vector<CliqueHandle> cliques = all_cliques(g);
            std::vector<int> owner(g.vertex_count(), -1);
            for (std::size_t c = 0; c < cliques.size(); ++c) {
                EXPECT_EQ(cliques[c].members.size(), static_cast<std::size_t>(n - k + 1));
                for (int v : cliques[c].members) {
                    EXPECT_EQ(owner[v], -1);
                    owner[v] = static_cast<int>(c);
                }
            }
            std::map<std::pair<int, int>, int> between;
            for (auto [u, v] : g.skeleton().edges()) {
                if (owner[u] != owner[v]) ++between[std::minmax(owner[u], owner[v])];
            }
            for (const auto& [pair, count] : between) EXPECT_LE(count, 1);

            if (k < 2) continue;
            for (int t = 2; t <= k; ++t) {
                DecompositionView view = decompose(g, t);
                // cross edges: perfect matchings of the predicted size
                std::uint64_t matching = falling_factorial(n - 2, k - 2);
                for (int i = 1; i <= n; ++i) {
                    for (int j = i + 1; j <= n; ++j) {
                        const auto& edges = view.cross_edges(i, j);
                        EXPECT_EQ(edges.size(), matching);
                        std::set<int> ends;
                        for (auto [u, v] : edges) {
                            EXPECT_EQ(g.edge_tag(u, v), (EdgeTag{EdgeKind::Swap, t}));
                            EXPECT_TRUE(ends.insert(u).second);
                            EXPECT_TRUE(ends.insert(v).second);
                        }
                    }
                }
                // every part is a faithful copy of the (n-1,k-1)-star graph
                for (int symbol = 1; symbol <= n; ++symbol) {
                    PartEmbedding emb = part_as_star(g, view, symbol);
                    EXPECT_EQ(emb.sub.spec(), (GraphSpec{n - 1, k - 1}));
                    const auto& part = view.parts[symbol - 1];
                    EXPECT_EQ(emb.parent_of.size(), part.size());
                    std::size_t part_edges = 0;
                    for (int p : part) {
                        for (int q : g.skeleton().adj[p]) {
                            if (q > p && emb.sub_of[q] >= 0) ++part_edges;
                        }
                    }
                    EXPECT_EQ(emb.sub.edge_count(), part_edges);
                    for (auto [a, b] : emb.sub.skeleton().edges()) {
                        EXPECT_TRUE(
                            g.skeleton().has_edge(emb.parent_of[a], emb.parent_of[b]));
                    }
                }
            }
        }
    }
    report(5, "clique partition, split matchings and part embeddings all verify",
           !HasFailure());
}

TEST(Acceptance, Criterion6FaultInjectionBelowThreshold) {
    // 1000 random removals of theorem_value - 1 edges per instance and seed:
    // every sample that keeps min degree >= h must leave the graph connected.
    for (auto [n, k, h] : {std::tuple{4, 2, 1}, {4, 3, 1}, {5, 3, 1}, {5, 3, 2}}) {
        StarGraph g = StarGraph::build({n, k});
        for (std::uint64_t seed : {1ull, 42ull, 7777ull}) {
            FaultTrialReport rep = run_fault_trial(g, h, 1000, seed);
            EXPECT_EQ(rep.sample_size, evaluate(n, k, h).theorem_value - 1);
            EXPECT_EQ(rep.disconnected, 0)
                << n << "," << k << "," << h << " seed=" << seed;
            EXPECT_GT(rep.qualifying, 0);
        }
    }
    report(6, "removing fewer than the predicted edges never disconnects", !HasFailure());
}

TEST(Acceptance, Criterion7DeterministicReports) {
    SweepOptions opt;
    opt.n_max = 5;
    SweepReport a = run_verify_sweep(opt);
    SweepReport b = run_verify_sweep(opt);
    EXPECT_EQ(sweep_to_csv(a), sweep_to_csv(b));
    EXPECT_EQ(sweep_to_json(a), sweep_to_json(b));

    SweepOptions threaded = opt;
    threaded.threads = 4;
    SweepReport c = run_verify_sweep(threaded);
    EXPECT_EQ(sweep_to_csv(a), sweep_to_csv(c));
    EXPECT_EQ(sweep_to_json(a), sweep_to_json(c));

    // thread count must not change values or reported sides
    for (auto [n, k, h] : {std::tuple{5, 3, 2}, {4, 3, 1}, {6, 2, 3}}) {
        SimpleGraph g = StarGraph::build({n, k}).skeleton();
        SolverResult one = lambda_h_exact(g, h, {}, 1);
        SolverResult four = lambda_h_exact(g, h, {}, 4);
        EXPECT_TRUE(one.value && four.value);
        if (one.value && four.value) {
            EXPECT_EQ(*one.value, *four.value);
            EXPECT_EQ(one.witness->x, four.witness->x);
            EXPECT_EQ(one.witness->cut, four.witness->cut);
        }
    }
    report(7, "reports and witnesses are byte-identical across runs and threads",
           !HasFailure());
}

}  // namespace
}  // namespace nkstar

int main(int argc, char** argv) {
    ::testing::InitGoogleTest(&argc, argv);
    return RUN_ALL_TESTS();
}
