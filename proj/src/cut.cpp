#include "nkstar/cut.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "nkstar/decomposition.hpp"

namespace nkstar {

namespace {

// Connected components of g with the given edges removed.
// Returns component id per vertex and the component count.
std::pair<std::vector<int>, int> components_without(const SimpleGraph& g,
                                                    const std::vector<Edge>& removed) {
    std::vector<Edge> gone = removed;
    std::sort(gone.begin(), gone.end());
    auto is_removed = [&gone](int u, int v) {
        if (u > v) std::swap(u, v);
        return std::binary_search(gone.begin(), gone.end(), Edge{u, v});
    };
    int V = g.vertex_count();
    std::vector<int> comp(V, -1);
    int count = 0;
    std::vector<int> stack;
    for (int s = 0; s < V; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.adj[u]) {
                if (comp[v] == -1 && !is_removed(u, v)) {
                    comp[v] = count;
                    stack.push_back(v);
                }
            }
        }
        ++count;
    }
    return {std::move(comp), count};
}

std::vector<int> surviving_degrees(const SimpleGraph& g, const std::vector<Edge>& removed) {
    std::vector<int> deg(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
    for (const auto& [u, v] : removed) {
        --deg[u];
        --deg[v];
    }
    return deg;
}

}  // namespace

std::vector<Edge> boundary(const SimpleGraph& g, const std::vector<int>& x) {
    int V = g.vertex_count();
    if (x.empty()) {
        throw std::invalid_argument("boundary: x must be nonempty");
    }
    std::vector<char> in_x(V, 0);
    for (int v : x) {
        if (v < 0 || v >= V) {
            throw std::invalid_argument("boundary: vertex " + std::to_string(v) +
                                        " out of range 0.." + std::to_string(V - 1));
        }
        if (in_x[v]) {
            throw std::invalid_argument("boundary: duplicate vertex " + std::to_string(v));
        }
        in_x[v] = 1;
    }
    if (static_cast<int>(x.size()) == V) {
        throw std::invalid_argument("boundary: x must be a proper subset");
    }
    std::vector<Edge> out;
    for (int u = 0; u < V; ++u) {
        if (!in_x[u]) continue;
        for (int v : g.adj[u]) {
            if (!in_x[v]) out.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

CutCheck verify_h_edge_cut(const SimpleGraph& g, const std::vector<Edge>& cut_edges, int h) {
    if (h < 0) {
        throw std::invalid_argument("verify_h_edge_cut: h must be >= 0, got " + std::to_string(h));
    }
    std::vector<Edge> normalized;
    normalized.reserve(cut_edges.size());
    for (auto [u, v] : cut_edges) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= g.vertex_count() || u == v || !g.has_edge(u, v)) {
            throw std::invalid_argument("verify_h_edge_cut: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") is not an edge of the graph");
        }
        normalized.emplace_back(u, v);
    }
    std::sort(normalized.begin(), normalized.end());
    if (std::adjacent_find(normalized.begin(), normalized.end()) != normalized.end()) {
        throw std::invalid_argument("verify_h_edge_cut: duplicate edge in cut");
    }

    auto [comp, count] = components_without(g, normalized);
    std::vector<int> deg = surviving_degrees(g, normalized);

    CutCheck check;
    check.witness.cut = normalized;
    check.witness.h = h;
    check.witness.components = count;

    std::vector<int> sizes(count, 0);
    for (int c : comp) ++sizes[c];
    check.component_sizes = sizes;
    std::sort(check.component_sizes.rbegin(), check.component_sizes.rend());

    for (int v = 0; v < g.vertex_count(); ++v) {
        if (deg[v] < h) check.low_degree.push_back(v);
    }

    if (count >= 2) {
        // side = smallest component; ties go to the one with the smallest vertex
        int best = 0;
        std::vector<int> first(count, g.vertex_count());
        for (int v = g.vertex_count() - 1; v >= 0; --v) first[comp[v]] = v;
        for (int c = 1; c < count; ++c) {
            if (sizes[c] < sizes[best] || (sizes[c] == sizes[best] && first[c] < first[best])) {
                best = c;
            }
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (comp[v] == best) check.witness.x.push_back(v);
        }
    }

    int min_in = -1, min_out = -1;
    std::vector<char> in_x(g.vertex_count(), 0);
    for (int v : check.witness.x) in_x[v] = 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int& slot = in_x[v] ? min_in : min_out;
        if (slot == -1 || deg[v] < slot) slot = deg[v];
    }
    check.witness.min_deg_inside = min_in;
    check.witness.min_deg_outside = min_out;
    check.witness.valid = count >= 2 && check.low_degree.empty();
    return check;
}

CutWitness construct_cut(const StarGraph& g, int h, CutMode mode) {
    PermLabel alpha;
    for (int s = 2; s <= g.spec().k; ++s) alpha.symbols.push_back(s);
    return construct_cut(g, h, mode, alpha);
}

CutWitness construct_cut(const StarGraph& g, int h, CutMode mode, const PermLabel& alpha) {
    const GraphSpec& spec = g.spec();
    if (spec.k < 2) {
        throw std::invalid_argument("construct_cut: requires k >= 2, got k=" + std::to_string(spec.k));
    }
    if (h < 0 || h > spec.n - spec.k) {
        throw std::invalid_argument("construct_cut: h must satisfy 0 <= h <= n-k, got h=" +
                                    std::to_string(h) + " with n-k=" + std::to_string(spec.n - spec.k));
    }
    CliqueHandle clique = clique_of(g, alpha);
    std::vector<int> x;
    if (mode == CutMode::SubClique) {
        // h+1 <= n-k+1 holds whenever h <= n-k
        x.assign(clique.members.begin(), clique.members.begin() + (h + 1));
    } else {
        x = clique.members;
    }
    return witness_for_side(g.skeleton(), std::move(x), h);
}

CutWitness witness_for_side(const SimpleGraph& g, std::vector<int> x, int h) {
    std::sort(x.begin(), x.end());
    std::vector<Edge> cut = boundary(g, x);
    CutCheck check = verify_h_edge_cut(g, cut, h);

    // Report relative to the given side, whatever the component split is.
    CutWitness w;
    w.x = std::move(x);
    w.cut = std::move(check.witness.cut);
    w.h = h;
    w.components = check.witness.components;

    std::vector<int> deg = surviving_degrees(g, w.cut);
    std::vector<char> in_x(g.vertex_count(), 0);
    for (int v : w.x) in_x[v] = 1;
    int min_in = -1, min_out = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int& slot = in_x[v] ? min_in : min_out;
        if (slot == -1 || deg[v] < slot) slot = deg[v];
    }
    w.min_deg_inside = min_in;
    w.min_deg_outside = min_out;
    w.valid = w.components >= 2 && min_in >= h && min_out >= h;
    return w;
}

std::string witness_to_json(const StarGraph& g, const CutWitness& w) {
    using ordered_json = nlohmann::ordered_json;
    ordered_json j;
    auto xs = ordered_json::array();
    for (int v : w.x) xs.push_back(g.label_text(v));
    j["X"] = std::move(xs);
    auto bs = ordered_json::array();
    for (const auto& [u, v] : w.cut) bs.push_back({u, v});
    j["B"] = std::move(bs);
    j["h"] = w.h;
    j["valid"] = w.valid;
    j["components"] = w.components;
    j["minDegInside"] = w.min_deg_inside;
    j["minDegOutside"] = w.min_deg_outside;
    return j.dump(2) + "\n";
}

}  // namespace nkstar
