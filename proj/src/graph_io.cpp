#include "nkstar/graph_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace nkstar {

using ordered_json = nlohmann::ordered_json;

std::string graph_to_json(const StarGraph& g) {
    ordered_json j;
    j["n"] = g.spec().n;
    j["k"] = g.spec().k;
    auto verts = ordered_json::array();
    for (int v = 0; v < g.vertex_count(); ++v) verts.push_back(g.label_text(v));
    j["vertices"] = std::move(verts);
    auto edges = ordered_json::array();
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (const auto& tn : g.neighbors(u)) {
            if (u < tn.vertex) edges.push_back({u, tn.vertex, tag_to_string(tn.tag)});
        }
    }
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

StarGraph graph_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("graph_from_json: parse failure: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("k") || !j.contains("vertices") || !j.contains("edges")) {
        throw std::runtime_error("graph_from_json: missing one of n/k/vertices/edges");
    }
    GraphSpec spec{j["n"].get<int>(), j["k"].get<int>()};
    StarGraph g = StarGraph::build(spec);

    // The file must describe exactly the canonical graph for (n,k):
    // labels in rank order, every edge present with the right tag.
    const auto& verts = j["vertices"];
    if (static_cast<int>(verts.size()) != g.vertex_count()) {
        throw std::runtime_error("graph_from_json: vertex count mismatch");
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (verts[v].get<std::string>() != g.label_text(v)) {
            throw std::runtime_error("graph_from_json: vertex " + std::to_string(v) +
                                     " is not in lexicographic rank order");
        }
    }
    const auto& edges = j["edges"];
    if (edges.size() != g.edge_count()) {
        throw std::runtime_error("graph_from_json: edge count mismatch");
    }
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 3) {
            throw std::runtime_error("graph_from_json: edge entries must be [u,v,tag]");
        }
        int u = e[0].get<int>();
        int v = e[1].get<int>();
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || u >= v) {
            throw std::runtime_error("graph_from_json: bad edge endpoints");
        }
        EdgeTag tag = tag_from_string(e[2].get<std::string>());
        if (g.edge_tag(u, v) != tag) {
            throw std::runtime_error("graph_from_json: edge (" + std::to_string(u) + "," +
                                     std::to_string(v) + ") tag mismatch");
        }
    }
    return g;
}

std::string graph_to_dot(const StarGraph& g) {
    std::string out;
    out += "graph star_" + std::to_string(g.spec().n) + "_" + std::to_string(g.spec().k) + " {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out += "  \"" + g.label_text(v) + "\";\n";
    }
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (const auto& tn : g.neighbors(u)) {
            if (u < tn.vertex) {
                out += "  \"" + g.label_text(u) + "\" -- \"" + g.label_text(tn.vertex) +
                       "\" [tag=" + tag_to_string(tn.tag) + "];\n";
            }
        }
    }
    out += "}\n";
    return out;
}

std::string graph_to_csv_edges(const StarGraph& g) {
    std::string out;
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (const auto& tn : g.neighbors(u)) {
            if (u < tn.vertex) {
                out += std::to_string(u) + "," + std::to_string(tn.vertex) + "," +
                       tag_to_string(tn.tag) + "\n";
            }
        }
    }
    return out;
}

std::string graph_info_json(const StarGraph& g) {
    int deg_min = g.vertex_count() ? g.skeleton().degree(0) : 0;
    int deg_max = deg_min;
    std::size_t swaps = 0, unswaps = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int d = g.skeleton().degree(v);
        deg_min = std::min(deg_min, d);
        deg_max = std::max(deg_max, d);
        for (const auto& tn : g.neighbors(v)) {
            ++(tn.tag.kind == EdgeKind::Swap ? swaps : unswaps);
        }
    }
    int clique_size = g.spec().n - g.spec().k + 1;
    ordered_json j;
    j["n"] = g.spec().n;
    j["k"] = g.spec().k;
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["degreeMin"] = deg_min;
    j["degreeMax"] = deg_max;
    j["swapEdges"] = swaps / 2;
    j["unswapEdges"] = unswaps / 2;
    j["cliqueSize"] = clique_size;
    j["cliques"] = g.vertex_count() / clique_size;
    return j.dump(2) + "\n";
}

}  // namespace nkstar
