#pragma once

#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "straightness/core.hpp"

namespace straightness {

/// Graph JSON:
///   {"nodes": [{"id": 0, "x": 0.0, "y": 0.0}, ...],
///    "edges": [{"u": 0, "v": 1}, ...]}
/// Edge lengths are derived from positions and never written.
inline nlohmann::json graph_to_json(const NetworkGraph& graph) {
  nlohmann::json nodes = nlohmann::json::array();
  for (NodeId id = 0; id < graph.node_count(); ++id) {
    const Point2D& p = graph.position(id);
    nodes.push_back({{"id", id}, {"x", p.x}, {"y", p.y}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : graph.edges()) {
    edges.push_back({{"u", e.u}, {"v", e.v}});
  }
  return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

/// Node ids may appear in any order but must be exactly 0..N-1.
inline NetworkGraph graph_from_json(const nlohmann::json& doc) {
  try {
    const auto& jnodes = doc.at("nodes");
    const auto& jedges = doc.at("edges");
    if (!jnodes.is_array() || !jedges.is_array()) {
      throw InvalidInput("graph JSON: \"nodes\" and \"edges\" must be arrays");
    }

    const std::size_t n = jnodes.size();
    std::vector<Point2D> positions(n);
    std::vector<bool> present(n, false);
    for (const auto& jn : jnodes) {
      const auto id = jn.at("id").get<long long>();
      if (id < 0 || static_cast<std::size_t>(id) >= n ||
          present[static_cast<std::size_t>(id)]) {
        throw InvalidInput("graph JSON: node ids must be unique and dense in 0.." +
                           std::to_string(n == 0 ? 0 : n - 1));
      }
      present[static_cast<std::size_t>(id)] = true;
      positions[static_cast<std::size_t>(id)] = {jn.at("x").get<double>(),
                                                 jn.at("y").get<double>()};
    }

    std::vector<Edge> edges;
    edges.reserve(jedges.size());
    for (const auto& je : jedges) {
      const auto u = je.at("u").get<long long>();
      const auto v = je.at("v").get<long long>();
      if (u < 0 || v < 0) throw InvalidInput("graph JSON: negative edge endpoint");
      edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
    }
    return build_graph(std::move(positions), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("graph JSON: ") + e.what());
  }
}

inline NetworkGraph read_graph_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput("graph JSON: " + std::string(e.what()));
  }
  return graph_from_json(doc);
}

}  // namespace straightness
