#include "nkstar/graph_io.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nkstar {
namespace {

using nlohmann::ordered_json;

TEST(GraphJson, RoundTripsThroughText) {
    StarGraph g = StarGraph::build({5, 3});
    std::string text = graph_to_json(g);
    StarGraph back = graph_from_json(text);
    EXPECT_EQ(back.spec(), g.spec());
    EXPECT_EQ(back.vertex_count(), g.vertex_count());
    EXPECT_EQ(graph_to_json(back), text);
}

TEST(GraphJson, SerializationIsByteDeterministic) {
    StarGraph g = StarGraph::build({4, 2});
    EXPECT_EQ(graph_to_json(g), graph_to_json(StarGraph::build({4, 2})));
}

TEST(GraphJson, CanonicalShape) {
    StarGraph g = StarGraph::build({3, 2});
    ordered_json j = ordered_json::parse(graph_to_json(g));
    EXPECT_EQ(j["n"], 3);
    EXPECT_EQ(j["k"], 2);
    ASSERT_EQ(j["vertices"].size(), 6u);
    EXPECT_EQ(j["vertices"][0], "12");
    EXPECT_EQ(j["vertices"][5], "32");
    ASSERT_EQ(j["edges"].size(), 6u);
    // edges sorted by (u,v) with u < v, each as [u, v, tag]
    EXPECT_EQ(j["edges"][0][0], 0);
    EXPECT_EQ(j["edges"][0][1], 2);
    EXPECT_EQ(j["edges"][0][2], "swap_2");
}

TEST(GraphJson, ParseRejectsNonCanonicalInput) {
    StarGraph g = StarGraph::build({3, 2});
    std::string text = graph_to_json(g);

    EXPECT_THROW(graph_from_json("not json"), std::runtime_error);
    EXPECT_THROW(graph_from_json("{}"), std::runtime_error);

    // right shape, wrong label order
    std::string swapped = text;
    auto a = swapped.find("\"12\"");
    auto b = swapped.find("\"13\"");
    ASSERT_NE(a, std::string::npos);
    ASSERT_NE(b, std::string::npos);
    swapped.replace(b, 4, "\"12\"");
    swapped.replace(a, 4, "\"13\"");
    EXPECT_THROW(graph_from_json(swapped), std::runtime_error);

    // tampered tag
    std::string bad_tag = text;
    auto t = bad_tag.find("swap_2");
    ASSERT_NE(t, std::string::npos);
    bad_tag.replace(t, 6, "unswap");
    EXPECT_THROW(graph_from_json(bad_tag), std::runtime_error);

    // spec outside the supported range
    EXPECT_THROW(graph_from_json("{\"n\":1,\"k\":1,\"vertices\":[],\"edges\":[]}"),
                 std::invalid_argument);
}

TEST(GraphDot, ListsEveryVertexAndTaggedEdge) {
    StarGraph g = StarGraph::build({3, 2});
    std::string dot = graph_to_dot(g);
    EXPECT_EQ(dot.find("graph star_3_2 {"), 0u);
    EXPECT_EQ(dot.rfind("}\n"), dot.size() - 2);
    for (int v = 0; v < g.vertex_count(); ++v) {
        EXPECT_NE(dot.find("\"" + g.label_text(v) + "\";"), std::string::npos);
    }
    EXPECT_NE(dot.find("\"12\" -- \"21\" [tag=swap_2];"), std::string::npos);
    EXPECT_NE(dot.find("[tag=unswap];"), std::string::npos);
    // undirected output: one line per edge
    std::size_t count = 0;
    for (std::size_t pos = dot.find(" -- "); pos != std::string::npos;
         pos = dot.find(" -- ", pos + 1)) {
        ++count;
    }
    EXPECT_EQ(count, g.edge_count());
}

TEST(GraphCsv, OneLinePerEdgeInJsonOrder) {
    StarGraph g = StarGraph::build({3, 2});
    std::string csv = graph_to_csv_edges(g);
    EXPECT_EQ(csv,
              "0,2,swap_2\n"
              "0,5,unswap\n"
              "1,3,unswap\n"
              "1,4,swap_2\n"
              "2,4,unswap\n"
              "3,5,swap_2\n");
}

TEST(GraphInfo, SummarizesCountsAndTagTotals) {
    StarGraph g = StarGraph::build({4, 2});
    ordered_json j = ordered_json::parse(graph_info_json(g));
    EXPECT_EQ(j["n"], 4);
    EXPECT_EQ(j["vertices"], 12);
    EXPECT_EQ(j["edges"], 18);
    EXPECT_EQ(j["degreeMin"], 3);
    EXPECT_EQ(j["degreeMax"], 3);
    // per vertex: k-1 = 1 swap, n-k = 2 unswaps -> 6 swap edges, 12 unswap
    EXPECT_EQ(j["swapEdges"], 6);
    EXPECT_EQ(j["unswapEdges"], 12);
    EXPECT_EQ(j["cliqueSize"], 3);
    EXPECT_EQ(j["cliques"], 4);
}

}  // namespace
}  // namespace nkstar
