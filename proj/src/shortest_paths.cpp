#include "ftspan/shortest_paths.hpp"

#include <algorithm>
#include <functional>

namespace ftspan {

void DijkstraWorkspace::run(const WeightedGraph& g, std::span<const std::uint8_t> removed,
                            PointId src, double bound, std::optional<PointId> target) {
  dist.assign(g.vertex_count(), kInfinity);
  heap_.clear();
  dist[src] = 0.0;
  heap_.push_back({0.0, src});
  const auto cmp = std::greater<Entry>{};
  while (!heap_.empty()) {
    std::pop_heap(heap_.begin(), heap_.end(), cmp);
    const auto [du, u] = heap_.back();
    heap_.pop_back();
    if (du > dist[u]) continue;
    if (du > bound) break;
    if (target && u == *target) break;
    for (const Incidence& inc : g.neighbors(u)) {
      if (!removed.empty() && removed[inc.edge]) continue;
      const double candidate = du + g.edge(inc.edge).w;
      if (candidate < dist[inc.to]) {
        dist[inc.to] = candidate;
        heap_.push_back({candidate, inc.to});
        std::push_heap(heap_.begin(), heap_.end(), cmp);
      }
    }
  }
}

FaultAdjacency fault_adjacency(std::size_t n, std::span<const EdgeKey> faults) {
  FaultAdjacency adj(n);
  for (const EdgeKey& e : faults) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

void HostWorkspace::run(const DistanceMatrix<double>& d, const FaultAdjacency& faults,
                        PointId src, std::optional<PointId> target) {
  const std::size_t n = d.size();
  dist.assign(n, kInfinity);
  settled_.assign(n, 0);
  if (blocked_.size() != n) {
    blocked_.assign(n, 0);
    stamp_ = 0;
  }
  dist[src] = 0.0;
  for (std::size_t round = 0; round < n; ++round) {
    PointId u = 0;
    double best = kInfinity;
    for (PointId v = 0; v < n; ++v) {
      if (!settled_[v] && dist[v] < best) {
        best = dist[v];
        u = v;
      }
    }
    if (best == kInfinity) break;
    settled_[u] = 1;
    if (target && u == *target) break;
    if (++stamp_ == 0) {
      std::fill(blocked_.begin(), blocked_.end(), 0);
      stamp_ = 1;
    }
    for (PointId v : faults[u]) blocked_[v] = stamp_;
    const auto row = d.row(u);
    for (PointId v = 0; v < n; ++v) {
      if (settled_[v] || v == u || blocked_[v] == stamp_) continue;
      const double candidate = best + row[v];
      if (candidate < dist[v]) dist[v] = candidate;
    }
  }
}

std::optional<double> shortest_path_dist(const WeightedGraph& g, const FaultSet& fault,
                                         PointId u, PointId v) {
  const auto mask = fault_mask(g, fault);
  DijkstraWorkspace ws;
  ws.run(g, mask, u, kInfinity, v);
  if (ws.dist[v] == kInfinity) return std::nullopt;
  return ws.dist[v];
}

DistanceMatrix<double> all_pairs_distances(const WeightedGraph& g,
                                           std::span<const std::uint8_t> removed) {
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  DistanceMatrix<double> out(g.vertex_count(), kInfinity);
#pragma omp parallel
  {
    DijkstraWorkspace ws;
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t s = 0; s < n; ++s) {
      ws.run(g, removed, static_cast<PointId>(s));
      for (std::int64_t v = 0; v < n; ++v) {
        out(static_cast<PointId>(s), static_cast<PointId>(v)) = ws.dist[v];
      }
    }
  }
  return out;
}

}  // namespace ftspan
