#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "straightness/analytic.hpp"
#include "straightness/core.hpp"
#include "straightness/generators.hpp"
#include "straightness/shortest_paths.hpp"

namespace straightness {

/// Builds the straightness record of (u, v) from a known geodesic distance.
inline RouteMetrics route_metrics(const NetworkGraph& graph, NodeId u, NodeId v,
                                  double d_geodesic) {
  if (u == v) throw InvalidInput("straightness of a node with itself is undefined");
  RouteMetrics r;
  r.source = u;
  r.target = v;
  r.d_spatial = graph.spatial_distance(u, v);
  r.d_geodesic = d_geodesic;
  if (!std::isfinite(d_geodesic) || r.d_spatial == 0.0 || d_geodesic <= 0.0) {
    r.skipped = true;
  } else {
    r.straightness = r.d_spatial / d_geodesic;
  }
  return r;
}

inline RouteMetrics pair_straightness(const NetworkGraph& graph,
                                      std::span<const DistanceRow> rows, NodeId u,
                                      NodeId v) {
  if (u >= rows.size() || v >= graph.node_count()) {
    throw InvalidInput("pair (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") out of range");
  }
  return route_metrics(graph, u, v, rows[u].distances[v]);
}

struct StraightnessSummary {
  std::size_t pair_count = 0;     // unordered pairs included in the mean
  double mean = 0.0;
  double std_dev = 0.0;           // population
  std::size_t skipped_pairs = 0;  // unreachable or co-located
};

struct SummaryOptions {
  unsigned threads = 1;
  bool strict = false;  // any skipped pair is an error
};

/// Mean and population standard deviation of straightness over all
/// unordered pairs. Rows may be computed concurrently; aggregation always
/// runs sequentially over pairs in (min id, max id) order, so the result
/// does not depend on the thread count.
inline StraightnessSummary summarize(const NetworkGraph& graph,
                                     const SummaryOptions& options = {}) {
  const std::size_t n = graph.node_count();
  if (n < 2) throw InvalidInput("straightness summary needs at least two nodes");

  // values[u] holds straightness to every v > u; NaN marks a skipped pair.
  std::vector<std::vector<double>> values(n);
  for_each_source(n, options.threads, [&](NodeId u) {
    const DistanceRow row = dijkstra(graph, u);
    auto& out = values[u];
    out.reserve(n - u - 1);
    for (NodeId v = u + 1; v < n; ++v) {
      const RouteMetrics r = route_metrics(graph, u, v, row.distances[v]);
      out.push_back(r.skipped ? std::nan("") : r.straightness);
    }
  });

  StraightnessSummary summary;
  double sum = 0.0;
  for (const auto& row : values) {
    for (double s : row) {
      if (std::isnan(s)) {
        ++summary.skipped_pairs;
      } else {
        sum += s;
        ++summary.pair_count;
      }
    }
  }
  if (options.strict && summary.skipped_pairs > 0) {
    throw InvalidInput(std::to_string(summary.skipped_pairs) +
                       " pairs are unreachable or co-located");
  }
  if (summary.pair_count == 0) throw InvalidInput("no measurable node pairs");

  summary.mean = sum / static_cast<double>(summary.pair_count);
  double squares = 0.0;
  for (const auto& row : values) {
    for (double s : row) {
      if (!std::isnan(s)) squares += (s - summary.mean) * (s - summary.mean);
    }
  }
  summary.std_dev = std::sqrt(squares / static_cast<double>(summary.pair_count));
  return summary;
}

using RectilinearFormula = std::function<double(double)>;
using RadialFormula = std::function<double(const Sector&, double)>;

/// Compares graph straightness from corner (0, 0) to every other node with
/// the closed form at the node's direction. Returns the largest deviation.
inline double center_curve_check(const NetworkGraph& grid,
                                 const RectilinearFormula& formula = straightness_rectilinear) {
  if (grid.node_count() < 2 || grid.position(0) != Point2D{0.0, 0.0}) {
    throw InvalidInput("expected a generated grid with node 0 at the origin");
  }
  for (const Point2D& p : grid.positions()) {
    if (p.x < 0 || p.y < 0 || p.x != std::round(p.x) || p.y != std::round(p.y)) {
      throw InvalidInput("expected a grid on the non-negative integer lattice");
    }
  }
  const DistanceRow row = dijkstra(grid, 0);
  double worst = 0.0;
  for (NodeId v = 1; v < grid.node_count(); ++v) {
    const Point2D& p = grid.position(v);
    const double measured = route_metrics(grid, 0, v, row.distances[v]).straightness;
    const double expected = formula(std::atan2(p.y, p.x));
    worst = std::max(worst, std::abs(measured - expected));
  }
  return worst;
}

struct RadialCheck {
  double max_deviation = 0.0;    // graph vs closed form
  double max_ring_spread = 0.0;  // same chord position, different rings
  std::size_t nodes_checked = 0;
};

/// Center-to-node straightness on a radio-concentric graph compared with the
/// closed form, for every ring node and side-subdivision node. Nodes at the
/// same position along their side must agree across rings.
inline RadialCheck center_radial_check(const NetworkGraph& graph, const RadialSpec& spec,
                                       const RadialFormula& formula = straightness_radial) {
  validate(spec);
  if (spec.side_subdivision < 2) {
    throw InvalidInput("radial check needs side_subdivision >= 2");
  }
  if (graph.node_count() != radial_node_count(spec)) {
    throw InvalidInput("graph does not match the radial layout");
  }
  const Sector sector = Sector::from_radii(spec.radii_count);
  const DistanceRow row = dijkstra(graph, radial_center_id());

  RadialCheck check;
  // (radius, step) -> min/max measured straightness over rings
  std::map<std::pair<int, int>, std::pair<double, double>> by_position;
  auto visit = [&](NodeId id, int radius, int step) {
    const Point2D& p = graph.position(id);
    const double measured =
        route_metrics(graph, radial_center_id(), id, row.distances[id]).straightness;
    const double expected = formula(sector, std::atan2(p.y, p.x));
    check.max_deviation = std::max(check.max_deviation, std::abs(measured - expected));
    ++check.nodes_checked;
    auto [it, fresh] = by_position.try_emplace({radius, step}, measured, measured);
    if (!fresh) {
      it->second.first = std::min(it->second.first, measured);
      it->second.second = std::max(it->second.second, measured);
    }
  };
  for (int ring = 1; ring <= spec.rings_count; ++ring) {
    for (int r = 0; r < spec.radii_count; ++r) {
      visit(radial_ring_node_id(spec, ring, r), r, 0);
      for (int step = 1; step < spec.side_subdivision; ++step) {
        visit(radial_side_node_id(spec, ring, r, step), r, step);
      }
    }
  }
  for (const auto& [key, range] : by_position) {
    check.max_ring_spread = std::max(check.max_ring_spread, range.second - range.first);
  }
  return check;
}

}  // namespace straightness
