#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nkstar/star_graph.hpp"

namespace nkstar {

using Edge = std::pair<int, int>;  // normalized u < v

// One candidate cut: the vertex side X, its boundary edge set, and what
// removing that boundary does to the graph.
struct CutWitness {
    std::vector<int> x;      // ascending vertex indices
    std::vector<Edge> cut;   // sorted boundary edges
    int h = 0;
    bool valid = false;      // >= 2 components and every survivor degree >= h
    int components = 0;
    int min_deg_inside = -1;   // min surviving degree on the X side (-1 if empty)
    int min_deg_outside = -1;  // same for the complement
};

// Explicit cut construction anchored at the clique of trailing symbols
// alpha (default 2,3,...,k): SubClique takes the h+1 smallest clique
// members, giving |cut| = (n-h-1)(h+1); FullClique takes the whole clique,
// giving |cut| = (n-k+1)(k-1). Witnesses are measured, not assumed: the
// valid flag reports what actually happened (SubClique genuinely fails
// min-degree once 2h > n-2; that is reported, not patched).
enum class CutMode { SubClique, FullClique };

CutWitness construct_cut(const StarGraph& g, int h, CutMode mode);
CutWitness construct_cut(const StarGraph& g, int h, CutMode mode, const PermLabel& alpha);

// Edges with exactly one endpoint in x; x must be a nonempty proper subset.
std::vector<Edge> boundary(const SimpleGraph& g, const std::vector<int>& x);

// Full diagnostics for an arbitrary candidate edge set.
struct CutCheck {
    CutWitness witness;                 // x = smallest component (empty if still connected)
    std::vector<int> component_sizes;   // descending
    std::vector<int> low_degree;        // survivors with degree < h, ascending
};

CutCheck verify_h_edge_cut(const SimpleGraph& g, const std::vector<Edge>& cut_edges, int h);

// Witness for a given vertex side: cut = boundary(x), degree minima taken
// relative to x / complement, validity measured on the actual removal.
CutWitness witness_for_side(const SimpleGraph& g, std::vector<int> x, int h);

std::string witness_to_json(const StarGraph& g, const CutWitness& w);

}  // namespace nkstar
