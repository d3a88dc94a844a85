#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "straightness/core.hpp"

namespace straightness {

struct GridSpec {
  int squares_per_side = 1;
};

struct RadialSpec {
  int radii_count = 4;       // k, sector angle is 2*pi/k
  int rings_count = 1;       // concentric layers at r = 1..m
  int side_subdivision = 1;  // each side chord split into this many segments
};

inline void validate(const GridSpec& spec) {
  if (spec.squares_per_side < 1) {
    throw InvalidInput("grid needs at least one square per side, got " +
                       std::to_string(spec.squares_per_side));
  }
}

inline void validate(const RadialSpec& spec) {
  if (spec.radii_count < 3) {
    throw InvalidInput("radio-concentric network needs more than 2 radii, got " +
                       std::to_string(spec.radii_count));
  }
  if (spec.rings_count < 1) {
    throw InvalidInput("radio-concentric network needs at least one ring, got " +
                       std::to_string(spec.rings_count));
  }
  if (spec.side_subdivision < 1) {
    throw InvalidInput("side subdivision must be >= 1, got " +
                       std::to_string(spec.side_subdivision));
  }
}

/// Id of grid node (i, j); row-major.
inline NodeId grid_node_id(const GridSpec& spec, int i, int j) {
  return static_cast<NodeId>(j) * static_cast<NodeId>(spec.squares_per_side + 1) +
         static_cast<NodeId>(i);
}

/// Square grid of (s+1)^2 nodes at integer coordinates with unit edges.
inline NetworkGraph generate_rectilinear(const GridSpec& spec) {
  validate(spec);
  const int side = spec.squares_per_side + 1;
  std::vector<Point2D> nodes;
  nodes.reserve(static_cast<std::size_t>(side) * static_cast<std::size_t>(side));
  for (int j = 0; j < side; ++j) {
    for (int i = 0; i < side; ++i) {
      nodes.push_back({static_cast<double>(i), static_cast<double>(j)});
    }
  }

  std::vector<Edge> edges;
  edges.reserve(2 * static_cast<std::size_t>(spec.squares_per_side) *
                static_cast<std::size_t>(side));
  for (int j = 0; j < side; ++j) {
    for (int i = 0; i < side; ++i) {
      if (i + 1 < side) edges.push_back({grid_node_id(spec, i, j), grid_node_id(spec, i + 1, j)});
      if (j + 1 < side) edges.push_back({grid_node_id(spec, i, j), grid_node_id(spec, i, j + 1)});
    }
  }
  return build_graph(std::move(nodes), std::move(edges));
}

// Node layout of a radio-concentric graph:
//   0                                  center
//   1 + (ring-1)*k + radius            ring nodes, ring in 1..m, radius in 0..k-1
//   1 + k*m + ((ring-1)*k + radius)*(q-1) + (step-1)
//                                      interior nodes of the side chord from
//                                      `radius` to `radius+1` on `ring`,
//                                      step in 1..q-1 counted from `radius`

inline NodeId radial_center_id() { return 0; }

inline NodeId radial_ring_node_id(const RadialSpec& spec, int ring, int radius) {
  return 1 + static_cast<NodeId>(ring - 1) * static_cast<NodeId>(spec.radii_count) +
         static_cast<NodeId>(radius);
}

inline NodeId radial_side_node_id(const RadialSpec& spec, int ring, int radius, int step) {
  const auto k = static_cast<NodeId>(spec.radii_count);
  const auto m = static_cast<NodeId>(spec.rings_count);
  const auto q = static_cast<NodeId>(spec.side_subdivision);
  return 1 + k * m +
         (static_cast<NodeId>(ring - 1) * k + static_cast<NodeId>(radius)) * (q - 1) +
         static_cast<NodeId>(step - 1);
}

inline std::size_t radial_node_count(const RadialSpec& spec) {
  const auto km = static_cast<std::size_t>(spec.radii_count) *
                  static_cast<std::size_t>(spec.rings_count);
  return 1 + km + km * static_cast<std::size_t>(spec.side_subdivision - 1);
}

/// Center at the origin, k radii, m rings at radius 1..m. Sides are straight
/// chords between consecutive radii, optionally split into q collinear
/// segments.
inline NetworkGraph generate_radioconcentric(const RadialSpec& spec) {
  validate(spec);
  const int k = spec.radii_count;
  const int m = spec.rings_count;
  const int q = spec.side_subdivision;
  const double theta = 2.0 * std::numbers::pi / k;

  std::vector<Point2D> nodes(radial_node_count(spec));
  nodes[radial_center_id()] = {0.0, 0.0};
  for (int ring = 1; ring <= m; ++ring) {
    for (int r = 0; r < k; ++r) {
      nodes[radial_ring_node_id(spec, ring, r)] = {ring * std::cos(r * theta),
                                                   ring * std::sin(r * theta)};
    }
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(m) *
                static_cast<std::size_t>(q + 1));
  for (int r = 0; r < k; ++r) {
    edges.push_back({radial_center_id(), radial_ring_node_id(spec, 1, r)});
    for (int ring = 1; ring < m; ++ring) {
      edges.push_back({radial_ring_node_id(spec, ring, r),
                       radial_ring_node_id(spec, ring + 1, r)});
    }
  }
  for (int ring = 1; ring <= m; ++ring) {
    for (int r = 0; r < k; ++r) {
      const NodeId from = radial_ring_node_id(spec, ring, r);
      const NodeId to = radial_ring_node_id(spec, ring, (r + 1) % k);
      const Point2D a = nodes[from];
      const Point2D b = nodes[to];
      NodeId prev = from;
      for (int step = 1; step < q; ++step) {
        const double t = static_cast<double>(step) / q;
        const NodeId id = radial_side_node_id(spec, ring, r, step);
        nodes[id] = {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
        edges.push_back({prev, id});
        prev = id;
      }
      edges.push_back({prev, to});
    }
  }
  return build_graph(std::move(nodes), std::move(edges));
}

}  // namespace straightness
