#include "ftspan/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ftspan/error.hpp"

namespace ftspan {

bool WeightedGraph::add_edge(PointId u, PointId v, double w) {
  if (u == v) {
    throw Error(ErrorCode::kBadParams, "self-loop at vertex " + std::to_string(u));
  }
  if (u >= vertex_count() || v >= vertex_count()) {
    throw Error(ErrorCode::kBadParams, "edge endpoint out of range");
  }
  if (!(w > 0.0) || !std::isfinite(w)) {
    throw Error(ErrorCode::kBadParams, "edge weight must be positive and finite");
  }
  const EdgeKey key = EdgeKey::of(u, v);
  const auto id = static_cast<EdgeId>(edges_.size());
  if (!index_.emplace(key.packed(), id).second) return false;
  edges_.push_back({key.u, key.v, w});
  adjacency_[key.u].push_back({key.v, id});
  adjacency_[key.v].push_back({key.u, id});
  return true;
}

std::optional<EdgeId> WeightedGraph::find_edge(PointId u, PointId v) const {
  if (u == v) return std::nullopt;
  const auto it = index_.find(EdgeKey::of(u, v).packed());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<EdgeKey> WeightedGraph::edge_keys() const {
  std::vector<EdgeKey> keys;
  keys.reserve(edges_.size());
  for (const Edge& e : edges_) keys.push_back(e.key());
  return keys;
}

WeightedGraph WeightedGraph::canonical() const {
  std::vector<Edge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end(),
            [](const Edge& a, const Edge& b) { return a.key() < b.key(); });
  WeightedGraph out(vertex_count());
  for (const Edge& e : sorted) out.add_edge(e.u, e.v, e.w);
  return out;
}

bool WeightedGraph::operator==(const WeightedGraph& other) const {
  if (vertex_count() != other.vertex_count() || edge_count() != other.edge_count()) {
    return false;
  }
  for (const Edge& e : edges_) {
    const auto id = other.find_edge(e.u, e.v);
    if (!id || other.edge(*id).w != e.w) return false;
  }
  return true;
}

int max_fault_degree(std::span<const EdgeKey> edges, std::size_t n) {
  std::vector<int> degree(n, 0);
  int best = 0;
  for (const EdgeKey& e : edges) {
    best = std::max({best, ++degree.at(e.u), ++degree.at(e.v)});
  }
  return best;
}

std::vector<std::uint8_t> fault_mask(const WeightedGraph& g, const FaultSet& fault) {
  std::vector<std::uint8_t> mask(g.edge_count(), 0);
  for (const EdgeKey& e : fault.edges) {
    const auto id = e.u < g.vertex_count() && e.v < g.vertex_count()
                        ? g.find_edge(e.u, e.v)
                        : std::nullopt;
    if (!id) {
      throw Error(ErrorCode::kFaultNotSubset, "fault edge {" + std::to_string(e.u) + "," +
                                                  std::to_string(e.v) + "} is not in the graph");
    }
    mask[*id] = 1;
  }
  return mask;
}

FaultSet fault_set_from_ids(const WeightedGraph& g, std::span<const EdgeId> ids, int f) {
  FaultSet out{f, {}};
  out.edges.reserve(ids.size());
  for (EdgeId id : ids) out.edges.push_back(g.edge(id).key());
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace ftspan
