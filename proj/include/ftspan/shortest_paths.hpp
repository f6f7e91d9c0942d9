#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "ftspan/distance_matrix.hpp"
#include "ftspan/graph.hpp"

namespace ftspan {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Reusable binary-heap Dijkstra over a WeightedGraph with masked edges.
// `removed` is either empty or holds one flag per edge id.
class DijkstraWorkspace {
 public:
  std::vector<double> dist;

  // Settles vertices in order of distance from src; stops early once the
  // frontier exceeds `bound` or `target` is settled.
  void run(const WeightedGraph& g, std::span<const std::uint8_t> removed, PointId src,
           double bound = kInfinity, std::optional<PointId> target = std::nullopt);

 private:
  using Entry = std::pair<double, PointId>;
  std::vector<Entry> heap_;
};

// Per-vertex lists of removed host pairs.
using FaultAdjacency = std::vector<std::vector<PointId>>;

FaultAdjacency fault_adjacency(std::size_t n, std::span<const EdgeKey> faults);

// O(n^2) Dijkstra on the complete graph over `d` with the pairs in `faults`
// removed.
class HostWorkspace {
 public:
  std::vector<double> dist;

  void run(const DistanceMatrix<double>& d, const FaultAdjacency& faults, PointId src,
           std::optional<PointId> target = std::nullopt);

 private:
  std::vector<std::uint8_t> settled_;
  std::vector<std::uint32_t> blocked_;
  std::uint32_t stamp_ = 0;
};

// delta_{g \ F}(u, v); nullopt when unreachable. Throws kFaultNotSubset.
std::optional<double> shortest_path_dist(const WeightedGraph& g, const FaultSet& fault,
                                         PointId u, PointId v);

// All-pairs distances of g with masked edges, one Dijkstra per source; the
// sources are distributed over OpenMP threads.
DistanceMatrix<double> all_pairs_distances(const WeightedGraph& g,
                                           std::span<const std::uint8_t> removed = {});

// Generic Dijkstra for exact arithmetic. adjacency[u] lists (v, w) pairs.
template <class T>
std::vector<std::optional<T>> dijkstra(
    const std::vector<std::vector<std::pair<PointId, T>>>& adjacency, PointId src) {
  std::vector<std::optional<T>> dist(adjacency.size());
  std::vector<std::uint8_t> done(adjacency.size(), 0);
  using Entry = std::pair<T, PointId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[src] = T(0);
  queue.push({T(0), src});
  while (!queue.empty()) {
    auto [du, u] = queue.top();
    queue.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (const auto& [v, w] : adjacency[u]) {
      const T candidate = du + w;
      if (!dist[v] || candidate < *dist[v]) {
        dist[v] = candidate;
        queue.push({candidate, v});
      }
    }
  }
  return dist;
}

}  // namespace ftspan
