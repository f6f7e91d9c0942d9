#include "ftspan/spanner_general.hpp"

#include "ftspan/shortest_paths.hpp"

namespace ftspan {

WeightedGraph greedy_spanner(const Metric& m, double t) {
  if (!(t >= 1.0)) throw Error(ErrorCode::kBadParams, "greedy spanner needs t >= 1");
  const auto n = static_cast<PointId>(m.size());
  std::vector<EdgeKey> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
  for (PointId p = 0; p < n; ++p) {
    for (PointId q = p + 1; q < n; ++q) pairs.push_back({p, q});
  }
  std::sort(pairs.begin(), pairs.end(), [&](const EdgeKey& a, const EdgeKey& b) {
    const double da = m.dist(a.u, a.v);
    const double db = m.dist(b.u, b.v);
    if (da != db) return da < db;
    return a < b;
  });
  WeightedGraph g(n);
  DijkstraWorkspace ws;
  for (const EdgeKey& e : pairs) {
    const double limit = t * m.dist(e.u, e.v);
    ws.run(g, {}, e.u, limit, e.v);
    if (ws.dist[e.v] > limit) g.add_edge(e.u, e.v, m.dist(e.u, e.v));
  }
  return g.canonical();
}

WeightedGraph metric_graph(const Metric& m, std::span<const EdgeKey> keys) {
  WeightedGraph g(m.size());
  for (const EdgeKey& k : keys) g.add_edge(k.u, k.v, m.dist(k.u, k.v));
  return g;
}

FortifiedSpanner fortify_with_detours(const Metric& m, const WeightedGraph& base, int f) {
  if (base.vertex_count() != m.size()) {
    throw Error(ErrorCode::kBadParams, "base graph and metric sizes differ");
  }
  std::vector<EdgeKey> keys = base.edge_keys();
  std::sort(keys.begin(), keys.end());
  FortifiedSpanner out;
  const auto edges = fortify_edges(m.matrix(), keys, f, &out.detours);
  out.graph = metric_graph(m, edges);
  return out;
}

WeightedGraph fortify(const Metric& m, const WeightedGraph& base, int f) {
  return fortify_with_detours(m, base, f).graph;
}

bool detours_survive(std::span<const DetourSet> detours, std::span<const EdgeKey> faulted) {
  auto in_fault = [&](PointId a, PointId b) {
    return std::binary_search(faulted.begin(), faulted.end(), EdgeKey::of(a, b));
  };
  for (const DetourSet& s : detours) {
    if (!in_fault(s.edge.u, s.edge.v)) continue;
    const bool survives = std::any_of(s.candidates.begin(), s.candidates.end(), [&](PointId c) {
      return !in_fault(s.edge.u, c) && !in_fault(c, s.edge.v);
    });
    if (!survives) return false;
  }
  return true;
}

}  // namespace ftspan
