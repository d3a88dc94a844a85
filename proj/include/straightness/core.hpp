#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace straightness {

using NodeId = std::size_t;

/// Raised for malformed input: bad generator parameters, invalid graphs,
/// angles outside an operation's domain.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Point2D {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2D&, const Point2D&) = default;
};

inline bool is_finite(const Point2D& p) {
  return std::isfinite(p.x) && std::isfinite(p.y);
}

/// Crow-flies distance between two positions.
inline double euclidean_distance(const Point2D& a, const Point2D& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

/// Unordered pair of node ids.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Entry of an adjacency list: neighbouring node and the length of the
/// connecting segment.
struct Adjacent {
  NodeId node = 0;
  double length = 0.0;
};

/// Immutable undirected graph embedded in the plane. Edges are straight
/// segments, so an edge's length is always the distance between its
/// endpoint positions.
class NetworkGraph {
 public:
  NetworkGraph() = default;

  std::size_t node_count() const { return positions_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Point2D& position(NodeId id) const { return positions_.at(id); }
  std::span<const Point2D> positions() const { return positions_; }
  std::span<const Edge> edges() const { return edges_; }

  double edge_length(std::size_t edge_index) const {
    const Edge& e = edges_.at(edge_index);
    return euclidean_distance(positions_[e.u], positions_[e.v]);
  }

  /// Neighbours of `id` in ascending node order.
  std::span<const Adjacent> neighbors(NodeId id) const {
    if (id >= node_count()) {
      throw InvalidInput("node id " + std::to_string(id) + " out of range");
    }
    return std::span<const Adjacent>(adjacency_).subspan(
        offsets_[id], offsets_[id + 1] - offsets_[id]);
  }

  double spatial_distance(NodeId a, NodeId b) const {
    return euclidean_distance(position(a), position(b));
  }

  friend NetworkGraph build_graph(std::vector<Point2D> nodes,
                                  std::vector<Edge> edges);

 private:
  std::vector<Point2D> positions_;
  std::vector<Edge> edges_;
  // CSR adjacency; lengths are computed from positions at construction.
  std::vector<std::size_t> offsets_{0};
  std::vector<Adjacent> adjacency_;
};

/// Validates nodes and edges and builds the adjacency structure.
/// Rejects non-finite or duplicate positions, out-of-range endpoints,
/// self-loops and duplicate edges (in either orientation).
inline NetworkGraph build_graph(std::vector<Point2D> nodes,
                                std::vector<Edge> edges) {
  std::map<std::pair<double, double>, NodeId> seen;
  for (NodeId id = 0; id < nodes.size(); ++id) {
    const Point2D& p = nodes[id];
    if (!is_finite(p)) {
      throw InvalidInput("node " + std::to_string(id) +
                         " has a non-finite coordinate");
    }
    auto [it, inserted] = seen.emplace(std::pair{p.x, p.y}, id);
    if (!inserted) {
      throw InvalidInput("nodes " + std::to_string(it->second) + " and " +
                         std::to_string(id) + " share a position");
    }
  }

  std::vector<std::pair<NodeId, NodeId>> keys;
  keys.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= nodes.size() || e.v >= nodes.size()) {
      throw InvalidInput("edge (" + std::to_string(e.u) + ", " +
                         std::to_string(e.v) + ") references a missing node");
    }
    if (e.u == e.v) {
      throw InvalidInput("self-loop on node " + std::to_string(e.u));
    }
    keys.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  std::sort(keys.begin(), keys.end());
  if (auto dup = std::adjacent_find(keys.begin(), keys.end());
      dup != keys.end()) {
    throw InvalidInput("duplicate edge (" + std::to_string(dup->first) + ", " +
                       std::to_string(dup->second) + ")");
  }

  NetworkGraph g;
  g.positions_ = std::move(nodes);
  g.edges_ = std::move(edges);

  const std::size_t n = g.positions_.size();
  std::vector<std::size_t> degree(n, 0);
  for (const Edge& e : g.edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + degree[i];

  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : g.edges_) {
    const double len = euclidean_distance(g.positions_[e.u], g.positions_[e.v]);
    g.adjacency_[cursor[e.u]++] = {e.v, len};
    g.adjacency_[cursor[e.v]++] = {e.u, len};
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]),
              [](const Adjacent& a, const Adjacent& b) { return a.node < b.node; });
  }
  return g;
}

/// Straightness record for one origin/destination pair.
struct RouteMetrics {
  NodeId source = 0;
  NodeId target = 0;
  double d_spatial = 0.0;
  double d_geodesic = 0.0;
  double straightness = 0.0;
  // Set when the pair is unreachable or co-located; straightness is then 0.
  bool skipped = false;
};

}  // namespace straightness
