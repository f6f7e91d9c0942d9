#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "ftspan/distance_matrix.hpp"

namespace ftspan {

using EdgeId = std::uint32_t;

// Unordered vertex pair stored with u < v.
struct EdgeKey {
  PointId u = 0;
  PointId v = 0;

  static EdgeKey of(PointId a, PointId b) {
    return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
  }
  std::uint64_t packed() const {
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }
  auto operator<=>(const EdgeKey&) const = default;
};

struct Edge {
  PointId u = 0;
  PointId v = 0;
  double w = 0.0;

  EdgeKey key() const { return EdgeKey::of(u, v); }
};

struct Incidence {
  PointId to;
  EdgeId edge;
};

// Undirected, positively weighted simple graph on vertices [0, n).
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(std::size_t n) : adjacency_(n) {}

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  // Returns false (and changes nothing) when {u,v} is already present.
  // Throws Error(kBadParams) on self-loops, out-of-range ids or w <= 0.
  bool add_edge(PointId u, PointId v, double w);

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[id]; }
  std::span<const Incidence> neighbors(PointId u) const { return adjacency_[u]; }

  std::optional<EdgeId> find_edge(PointId u, PointId v) const;
  bool has_edge(PointId u, PointId v) const { return find_edge(u, v).has_value(); }

  std::vector<EdgeKey> edge_keys() const;

  // Copy whose edge list is sorted by EdgeKey; used for deterministic output.
  WeightedGraph canonical() const;

  bool operator==(const WeightedGraph& other) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::unordered_map<std::uint64_t, EdgeId> index_;
};

// Edge subset of some graph together with its declared degree budget.
struct FaultSet {
  int f = 0;
  std::vector<EdgeKey> edges;

  bool operator==(const FaultSet&) const = default;
};

// Maximum, over vertices, of the number of incident edges in `edges`.
int max_fault_degree(std::span<const EdgeKey> edges, std::size_t n);

// Per-edge removal flags for `g`. Throws Error(kFaultNotSubset) when a fault
// edge is not an edge of g.
std::vector<std::uint8_t> fault_mask(const WeightedGraph& g, const FaultSet& fault);

FaultSet fault_set_from_ids(const WeightedGraph& g, std::span<const EdgeId> ids, int f);

}  // namespace ftspan
