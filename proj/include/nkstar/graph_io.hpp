#pragma once

#include <string>

#include "nkstar/star_graph.hpp"

namespace nkstar {

// Canonical JSON: {"n","k","vertices":[labels in rank order],
// "edges":[[u,v,tag],...]} with u < v, edges sorted by (u,v).
// Serialization is byte-deterministic; parse validates against a rebuild.
std::string graph_to_json(const StarGraph& g);
StarGraph graph_from_json(const std::string& text);

// Undirected DOT, node ids are the permutation strings, each edge carries
// tag=swap_i or tag=unswap.
std::string graph_to_dot(const StarGraph& g);

// One "u,v,tag" line per edge (rank indices), same order as the JSON edges.
std::string graph_to_csv_edges(const StarGraph& g);

// Size/degree/tag-count summary of a built graph, JSON object.
std::string graph_info_json(const StarGraph& g);

}  // namespace nkstar
