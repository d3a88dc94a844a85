#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "straightness/core.hpp"
#include "straightness/graph_json.hpp"

using namespace straightness;

TEST(EuclideanDistance, KnownValues) {
  EXPECT_EQ(euclidean_distance({0, 0}, {0, 0}), 0.0);
  EXPECT_DOUBLE_EQ(euclidean_distance({0, 0}, {3, 4}), 5.0);
  const double a = 2.0 * std::numbers::pi / 3.0;
  EXPECT_NEAR(euclidean_distance({1, 0}, {std::cos(a), std::sin(a)}), std::sqrt(3.0), 1e-15);
}

TEST(EuclideanDistance, Symmetric) {
  const Point2D p{1.25, -7.5}, q{-3.0, 2.0};
  EXPECT_EQ(euclidean_distance(p, q), euclidean_distance(q, p));
}

TEST(BuildGraph, SingleEdge) {
  const NetworkGraph g = build_graph({{0, 0}, {1, 0}}, {{0, 1}});
  EXPECT_EQ(g.node_count(), 2u);
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_DOUBLE_EQ(g.edge_length(0), 1.0);
  ASSERT_EQ(g.neighbors(0).size(), 1u);
  EXPECT_EQ(g.neighbors(0)[0].node, 1u);
  EXPECT_DOUBLE_EQ(g.neighbors(1)[0].length, 1.0);
}

TEST(BuildGraph, UnitSquare) {
  const NetworkGraph g =
      build_graph({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_EQ(g.edge_count(), 4u);
  for (std::size_t e = 0; e < g.edge_count(); ++e) EXPECT_DOUBLE_EQ(g.edge_length(e), 1.0);
  for (NodeId v = 0; v < 4; ++v) EXPECT_EQ(g.neighbors(v).size(), 2u);
}

TEST(BuildGraph, NeighborsSortedById) {
  const NetworkGraph g = build_graph({{0, 0}, {1, 0}, {0, 1}, {-1, 0}}, {{0, 3}, {0, 1}, {2, 0}});
  const auto adj = g.neighbors(0);
  ASSERT_EQ(adj.size(), 3u);
  EXPECT_EQ(adj[0].node, 1u);
  EXPECT_EQ(adj[1].node, 2u);
  EXPECT_EQ(adj[2].node, 3u);
}

TEST(BuildGraph, RejectsMalformedInput) {
  EXPECT_THROW(build_graph({{0, 0}, {0, 0}}, {}), InvalidInput);
  EXPECT_THROW(build_graph({{0, 0}, {1, 0}}, {{1, 1}}), InvalidInput);
  EXPECT_THROW(build_graph({{0, 0}, {1, 0}}, {{0, 1}, {1, 0}}), InvalidInput);
  EXPECT_THROW(build_graph({{0, 0}, {1, 0}}, {{0, 2}}), InvalidInput);
  EXPECT_THROW(build_graph({{0, 0}, {std::numeric_limits<double>::infinity(), 0}}, {}),
               InvalidInput);
  EXPECT_THROW(build_graph({{0, 0}, {std::nan(""), 0}}, {}), InvalidInput);
}

TEST(BuildGraph, NeighborsOfMissingNode) {
  const NetworkGraph g = build_graph({{0, 0}}, {});
  EXPECT_THROW(g.neighbors(1), InvalidInput);
}

TEST(GraphJson, RoundTripKeepsStructure) {
  const NetworkGraph g =
      build_graph({{0, 0}, {1, 0}, {0.5, 0.25}}, {{0, 1}, {1, 2}});
  const auto doc = graph_to_json(g);
  EXPECT_FALSE(doc["edges"][0].contains("length"));
  const NetworkGraph back = graph_from_json(doc);
  ASSERT_EQ(back.node_count(), 3u);
  ASSERT_EQ(back.edge_count(), 2u);
  for (NodeId v = 0; v < 3; ++v) EXPECT_EQ(back.position(v), g.position(v));
  EXPECT_EQ(back.edges()[1], (Edge{1, 2}));
}

TEST(GraphJson, NodesInAnyOrder) {
  const auto doc = nlohmann::json::parse(R"({
    "nodes": [{"id": 1, "x": 3, "y": 4}, {"id": 0, "x": 0, "y": 0}],
    "edges": [{"u": 1, "v": 0}]})");
  const NetworkGraph g = graph_from_json(doc);
  EXPECT_EQ(g.position(1), (Point2D{3, 4}));
  EXPECT_DOUBLE_EQ(g.edge_length(0), 5.0);
}

TEST(GraphJson, RejectsBadDocuments) {
  EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"nodes": []})")), InvalidInput);
  EXPECT_THROW(graph_from_json(nlohmann::json::parse(
                   R"({"nodes": [{"id": 2, "x": 0, "y": 0}], "edges": []})")),
               InvalidInput);
  EXPECT_THROW(graph_from_json(nlohmann::json::parse(
                   R"({"nodes": [{"id": 0, "x": "a", "y": 0}], "edges": []})")),
               InvalidInput);
  EXPECT_THROW(graph_from_json(nlohmann::json::parse(
                   R"({"nodes": [{"id": 0, "x": 0, "y": 0}, {"id": 1, "x": 0, "y": 0}],
                       "edges": []})")),
               InvalidInput);
}

TEST(GraphJson, MissingFileIsIoError) {
  EXPECT_THROW(read_graph_json("/nonexistent/graph.json"), IoError);
}
