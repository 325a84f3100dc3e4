#include "nkstar/star_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace nkstar {

std::size_t SimpleGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nbrs : adj) twice += nbrs.size();
    return twice / 2;
}

bool SimpleGraph::has_edge(int u, int v) const {
    const auto& nbrs = adj[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int u = 0; u < vertex_count(); ++u) {
        for (int v : adj[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;  // already sorted: u ascending, adj[u] ascending
}

std::string tag_to_string(const EdgeTag& tag) {
    if (tag.kind == EdgeKind::Unswap) return "unswap";
    return "swap_" + std::to_string(tag.swap_index);
}

EdgeTag tag_from_string(const std::string& text) {
    if (text == "unswap") return {EdgeKind::Unswap, 0};
    if (text.rfind("swap_", 0) == 0) {
        try {
            int idx = std::stoi(text.substr(5));
            if (idx >= 2) return {EdgeKind::Swap, idx};
        } catch (const std::exception&) {
            // fall through to the error below
        }
    }
    throw std::invalid_argument("unknown edge tag '" + text + "'");
}

StarGraph StarGraph::build(const GraphSpec& spec) {
    validate_spec(spec);
    std::uint64_t count = num_vertices(spec);
    constexpr std::uint64_t kBuildLimit = 5'000'000;
    if (count > kBuildLimit) {
        throw std::invalid_argument("StarGraph::build: " + std::to_string(count) +
                                    " vertices exceeds build limit " + std::to_string(kBuildLimit));
    }

    StarGraph g;
    g.spec_ = spec;
    int V = static_cast<int>(count);
    g.labels_.reserve(V);
    for (int i = 0; i < V; ++i) g.labels_.push_back(unrank(i, spec));

    g.tagged_.resize(V);
    g.skeleton_.adj.resize(V);
    for (int v = 0; v < V; ++v) {
        const PermLabel& p = g.labels_[v];
        auto& out = g.tagged_[v];
        out.reserve(spec.n - 1);

        // swap edges: exchange symbol 1 with symbol at position i (1-based i in 2..k)
        for (int i = 2; i <= spec.k; ++i) {
            PermLabel q = p;
            std::swap(q.symbols[0], q.symbols[i - 1]);
            out.push_back({static_cast<int>(rank(q, spec)), {EdgeKind::Swap, i}});
        }
        // unswap edges: replace the first symbol with each absent one
        unsigned used = 0;
        for (int s : p.symbols) used |= 1u << s;
        for (int a = 1; a <= spec.n; ++a) {
            if (used & (1u << a)) continue;
            PermLabel q = p;
            q.symbols[0] = a;
            out.push_back({static_cast<int>(rank(q, spec)), {EdgeKind::Unswap, 0}});
        }

        std::sort(out.begin(), out.end(),
                  [](const TaggedNeighbor& a, const TaggedNeighbor& b) { return a.vertex < b.vertex; });
        auto& plain = g.skeleton_.adj[v];
        plain.reserve(out.size());
        for (const auto& tn : out) plain.push_back(tn.vertex);
    }
    return g;
}

const PermLabel& StarGraph::label(int v) const {
    if (v < 0 || v >= vertex_count()) {
        throw std::out_of_range("StarGraph::label: vertex " + std::to_string(v) + " out of range 0.." +
                                std::to_string(vertex_count() - 1));
    }
    return labels_[v];
}

int StarGraph::index_of(const PermLabel& label) const {
    return static_cast<int>(rank(label, spec_));
}

std::span<const TaggedNeighbor> StarGraph::neighbors(int v) const {
    if (v < 0 || v >= vertex_count()) {
        throw std::out_of_range("StarGraph::neighbors: vertex " + std::to_string(v) +
                                " out of range 0.." + std::to_string(vertex_count() - 1));
    }
    return tagged_[v];
}

EdgeTag StarGraph::edge_tag(int u, int v) const {
    for (const auto& tn : neighbors(u)) {
        if (tn.vertex == v) return tn.tag;
    }
    throw std::invalid_argument("StarGraph::edge_tag: no edge between " + std::to_string(u) + " and " +
                                std::to_string(v));
}

}  // namespace nkstar
