#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nkstar/cut.hpp"
#include "nkstar/decomposition.hpp"
#include "nkstar/formula.hpp"
#include "nkstar/solver.hpp"

namespace nkstar {

std::string solver_result_to_json(const StarGraph& g, const SolverResult& r);

// ---------------------------------------------------------------------------
// Split of a cut across the parts of a decomposition: which parts the side X
// touches, which it shares with the complement Y, and where the cut edges land.

struct CutPartAnalysis {
    int t = 0;
    std::vector<std::vector<int>> x_parts;  // X restricted to the part of symbol i+1
    std::vector<std::vector<int>> y_parts;  // complement restricted likewise
    std::vector<std::vector<Edge>> internal_cut;          // cut edges inside one part
    std::vector<std::vector<std::vector<Edge>>> cross_cut;  // [i][j], i<j, between parts
    std::vector<int> j_set;    // symbols whose part meets X
    std::vector<int> j_prime;  // symbols whose part meets both X and Y
    std::vector<int> t_set;    // symbols whose part meets Y
    std::size_t internal_total = 0;
    std::size_t cross_total = 0;
};

CutPartAnalysis analyze_cut_parts(const StarGraph& g, const DecompositionView& view,
                                  const CutWitness& w);

// One part that the cut genuinely splits: does removing its share of the cut
// disconnect the part while keeping surviving degrees >= h-1?
struct PartCutVerdict {
    int symbol = 0;
    int cut_size = 0;
    int components = 0;
    bool is_cut = false;
};

struct CutSplitReport {
    GraphSpec spec;
    int h = 0;
    int t = 0;
    SolverResult solved;
    std::vector<int> j_set, j_prime, t_set;
    std::vector<PartCutVerdict> verdicts;  // one per symbol in j_prime
    std::size_t internal_total = 0;        // cut edges inside j_prime parts
    bool accounting_ok = false;            // |B| >= internal_total
    bool all_parts_pass = false;
};

// Solves for an optimal h-cut, splits it along position t, and checks that
// every part meeting both sides is itself (h-1)-cut by its share of the edges.
// Requires k >= 3 and 1 <= h <= n-k (throws std::domain_error otherwise).
CutSplitReport check_cut_split(const StarGraph& g, int h, int t,
                               const SearchBudget& budget = {}, int threads = 1);
std::string cut_split_to_json(const StarGraph& g, const CutSplitReport& rep);

// ---------------------------------------------------------------------------
// Formula-vs-solver sweep over the (n,k,h) lattice.

struct SweepRow {
    int n = 0, k = 0, h = 0;
    std::int64_t theorem_value = 0;
    std::optional<int> solver_value;
    bool exact = false;
    bool match = false;  // asserted only when exact
    std::int64_t elapsed_ms = 0;
    std::optional<CutWitness> witness;
};

struct SweepOptions {
    int n_max = 5;
    int max_vertices = 60;  // skip instances larger than this
    SearchBudget budget;    // per instance; default unlimited
    int threads = 1;
    bool timing = false;    // keep measured elapsed_ms in serialized output
};

struct SweepReport {
    SweepOptions options;
    std::vector<SweepRow> rows;
    int mismatches = 0;
    int inconclusive = 0;

    // 0 all matched, 1 mismatch, 3 inconclusive rows but no mismatch
    int exit_code() const;
};

SweepReport run_verify_sweep(const SweepOptions& options);
std::string sweep_to_csv(const SweepReport& report);
std::string sweep_to_json(const SweepReport& report);

// ---------------------------------------------------------------------------
// Randomized fault injection: remove theorem_value - 1 random edges; whenever
// the survivor keeps min degree >= h it must stay connected.

struct FaultTrialReport {
    int n = 0, k = 0, h = 0;
    std::int64_t theorem_value = 0;
    int sample_size = 0;  // theorem_value - 1
    int trials = 0;
    std::uint64_t seed = 0;
    int qualifying = 0;    // samples whose survivor keeps min degree >= h
    int disconnected = 0;  // qualifying samples that still disconnected (expect 0)
};

FaultTrialReport run_fault_trial(const StarGraph& g, int h, int trials, std::uint64_t seed);
std::string fault_trial_to_json(const FaultTrialReport& report);

// Uniform edge sample of the given size, without replacement; deterministic
// for a fixed generator state on every platform.
std::vector<Edge> sample_edges(const SimpleGraph& g, int count, std::mt19937_64& rng);

}  // namespace nkstar
