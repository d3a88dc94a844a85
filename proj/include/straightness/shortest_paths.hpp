#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "straightness/core.hpp"

namespace straightness {

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

/// Geodesic distances from one source to every node; kUnreachable marks
/// nodes in other components.
struct DistanceRow {
  NodeId source = 0;
  std::vector<double> distances;
};

inline DistanceRow dijkstra(const NetworkGraph& graph, NodeId source) {
  if (source >= graph.node_count()) {
    throw InvalidInput("source " + std::to_string(source) + " out of range");
  }
  DistanceRow row{source, std::vector<double>(graph.node_count(), kUnreachable)};
  std::vector<bool> settled(graph.node_count(), false);

  // Min-heap ordered by (distance, node id).
  using Entry = std::pair<double, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  row.distances[source] = 0.0;
  frontier.emplace(0.0, source);

  while (!frontier.empty()) {
    const auto [dist, node] = frontier.top();
    frontier.pop();
    if (settled[node]) continue;
    settled[node] = true;
    for (const Adjacent& next : graph.neighbors(node)) {
      const double candidate = dist + next.length;
      if (candidate < row.distances[next.node]) {
        row.distances[next.node] = candidate;
        frontier.emplace(candidate, next.node);
      }
    }
  }
  return row;
}

/// Worker count: `requested` if positive, otherwise hardware concurrency.
inline unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Reads STRAIGHTNESS_THREADS (0 or unset = auto).
inline unsigned threads_from_env() {
  const char* raw = std::getenv("STRAIGHTNESS_THREADS");
  if (raw == nullptr || *raw == '\0') return resolve_threads(0);
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 0) {
    throw InvalidInput(std::string("STRAIGHTNESS_THREADS must be a non-negative integer, got \"") +
                       raw + "\"");
  }
  return resolve_threads(static_cast<unsigned>(value));
}

/// Runs `task(source)` for every source id on up to `threads` workers.
/// Sources are handed out in increasing order; `task` must only touch
/// per-source state.
template <typename Task>
void for_each_source(std::size_t count, unsigned threads, Task&& task) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(static_cast<NodeId>(i));
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) task(static_cast<NodeId>(i));
    });
  }
}

/// One row per source, ordered by source id regardless of scheduling.
inline std::vector<DistanceRow> all_pairs(const NetworkGraph& graph, unsigned threads = 1) {
  std::vector<DistanceRow> rows(graph.node_count());
  for_each_source(graph.node_count(), threads,
                  [&](NodeId source) { rows[source] = dijkstra(graph, source); });
  return rows;
}

}  // namespace straightness
