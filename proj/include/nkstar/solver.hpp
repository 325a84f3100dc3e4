#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nkstar/cut.hpp"
#include "nkstar/star_graph.hpp"

namespace nkstar {

// Limits for the subset search. Zero means "no limit". A max_subset_size
// below floor(|V|/2) turns the search into an upper-bound probe, so results
// are reported exact=false in that case.
struct SearchBudget {
    std::uint64_t node_limit = 0;
    std::uint64_t time_limit_ms = 0;
    int max_subset_size = 0;
};

struct SolverResult {
    std::optional<int> value;           // empty: no qualifying cut found
    std::optional<CutWitness> witness;  // present iff value is
    std::uint64_t nodes_explored = 0;
    std::int64_t elapsed_ms = 0;
    bool exact = false;  // search ran to completion within the budget
};

// Known-good upper bound used to tighten pruning from the start; x must be
// the vertex side of a verified h-cut of value `value`.
struct SeedCut {
    int value = 0;
    std::vector<int> x;
};

// Edge connectivity by unit-capacity augmenting paths: min over t != 0 of
// maxflow(0, t). Returns 0 for disconnected or single-vertex graphs.
int edge_connectivity(const SimpleGraph& g);

// Minimum |boundary(X)| over connected X with 1 <= |X| <= floor(|V|/2)
// whose removal leaves every vertex (inside and outside) with degree >= h.
// Exhaustive fixed-root enumeration of connected subsets, with sound
// lower-bound pruning (blocked-edge count and capped absorption) plus
// degree-feasibility cuts. Pruning discards a branch only when its bound
// strictly exceeds the incumbent, so every optimum-value side is visited
// and the reported witness is the lexicographically smallest optimal side
// regardless of thread schedule. Subsets of size exactly |V|/2 (even |V|)
// are only accepted when they contain vertex 0, so each split is counted
// once. Workers share the incumbent atomically; merge is canonical.
SolverResult lambda_h_exact(const SimpleGraph& g, int h, const SearchBudget& budget = {},
                            int threads = 1, const std::optional<SeedCut>& seed = {});

// Independent oracle: same candidate definition, but plain enumeration with
// per-candidate evaluation from scratch and no pruning beyond subset
// connectivity. Hard-capped at 30 vertices.
SolverResult lambda_h_bruteforce(const SimpleGraph& g, int h);

}  // namespace nkstar
