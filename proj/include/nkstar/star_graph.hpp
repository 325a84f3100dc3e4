#pragma once

#include <span>
#include <utility>
#include <vector>

#include "nkstar/perm.hpp"

namespace nkstar {

// Plain undirected graph on vertices 0..V-1, adjacency sorted ascending.
// The connectivity solvers run on this; StarGraph exposes one as its skeleton.
struct SimpleGraph {
    std::vector<std::vector<int>> adj;

    int vertex_count() const { return static_cast<int>(adj.size()); }
    std::size_t edge_count() const;
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    // Sorted list of normalized (u < v) edges.
    std::vector<std::pair<int, int>> edges() const;
};

enum class EdgeKind { Swap, Unswap };

// Swap edges exchange position 1 with position swap_index (2..k, 1-based);
// unswap edges replace the first symbol with one not present in the label.
struct EdgeTag {
    EdgeKind kind = EdgeKind::Unswap;
    int swap_index = 0;  // meaningful only when kind == Swap

    bool operator==(const EdgeTag&) const = default;
};

std::string tag_to_string(const EdgeTag& tag);
EdgeTag tag_from_string(const std::string& text);

struct TaggedNeighbor {
    int vertex = 0;
    EdgeTag tag;

    bool operator==(const TaggedNeighbor&) const = default;
};

// Immutable (n,k)-star graph. Vertex i is the i-th k-permutation of {1..n}
// in lexicographic order, so vertex indices and label order agree.
class StarGraph {
  public:
    static StarGraph build(const GraphSpec& spec);

    const GraphSpec& spec() const { return spec_; }
    int vertex_count() const { return skeleton_.vertex_count(); }
    std::size_t edge_count() const { return skeleton_.edge_count(); }

    const PermLabel& label(int v) const;
    std::string label_text(int v) const { return format_label(label(v), spec_); }
    int index_of(const PermLabel& label) const;  // rank, validated

    // Tagged neighbors of v, sorted by neighbor index. Range-checked.
    std::span<const TaggedNeighbor> neighbors(int v) const;

    // Untagged view shared with the solvers.
    const SimpleGraph& skeleton() const { return skeleton_; }

    // Tag of an existing edge; throws std::invalid_argument if absent.
    EdgeTag edge_tag(int u, int v) const;

  private:
    StarGraph() = default;

    GraphSpec spec_;
    std::vector<PermLabel> labels_;
    std::vector<std::vector<TaggedNeighbor>> tagged_;
    SimpleGraph skeleton_;
};

}  // namespace nkstar
