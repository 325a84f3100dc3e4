#pragma once

#include <utility>
#include <vector>

#include "nkstar/star_graph.hpp"

namespace nkstar {

// Split of an (n,k)-star graph along a label position t in 2..k: part i
// holds the vertices whose t-th symbol is i. All edges between two parts
// carry tag swap_t and form a perfect matching between the parts they join.
struct DecompositionView {
    int t = 0;
    // parts[i-1]: vertices with symbol i at position t, ascending.
    std::vector<std::vector<int>> parts;
    // symbol at position t per vertex (1..n).
    std::vector<int> part_symbol;
    // cross[{i,j}] with i < j: edges (u in part i, v in part j), sorted by u.
    std::vector<std::vector<std::vector<std::pair<int, int>>>> cross;

    const std::vector<std::pair<int, int>>& cross_edges(int i, int j) const;
};

// Requires 2 <= t <= k; violations throw std::invalid_argument.
DecompositionView decompose(const StarGraph& g, int t);

// One part re-expressed as an (n-1,k-1)-star graph: drop position t and
// relabel the remaining symbols order-preservingly onto 1..n-1. The map
// parent_of/sub_of is an adjacency-preserving bijection onto sub's vertices.
struct PartEmbedding {
    int t = 0;
    int symbol = 0;            // the fixed symbol at position t
    StarGraph sub;             // the (n-1,k-1)-star graph
    std::vector<int> parent_of;  // sub vertex -> parent vertex
    std::vector<int> sub_of;     // parent vertex -> sub vertex, -1 outside the part
};

PartEmbedding part_as_star(const StarGraph& g, const DecompositionView& view, int symbol);

// Vertices sharing the trailing symbols alpha (positions 2..k) induce a
// complete subgraph on n-k+1 vertices, connected by unswap edges; these
// cliques partition the vertex set.
struct CliqueHandle {
    PermLabel alpha;
    std::vector<int> members;  // ascending vertex indices
};

CliqueHandle clique_of(const StarGraph& g, const PermLabel& alpha);

// Every clique, ordered by the rank of alpha among (k-1)-permutations.
std::vector<CliqueHandle> all_cliques(const StarGraph& g);

// Report-friendly summary: part sizes and cross-edge counts.
std::string decomposition_to_json(const StarGraph& g, const DecompositionView& view);

}  // namespace nkstar
