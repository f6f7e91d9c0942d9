#pragma once

#include <cstdint>
#include <initializer_list>
#include <tuple>
#include <vector>

#include "ftspan/generators.hpp"
#include "ftspan/graph.hpp"
#include "ftspan/metric.hpp"

namespace ftspan::testing {

// 1-D Euclidean metric on the given coordinates.
inline Metric line_metric(const std::vector<double>& xs) {
  return euclidean_metric(EuclideanPoints(1, xs));
}

inline Metric planar_metric(const std::vector<std::vector<double>>& rows) {
  return euclidean_metric(EuclideanPoints::from_rows(rows));
}

inline WeightedGraph make_graph(std::size_t n,
                                std::initializer_list<std::tuple<PointId, PointId, double>> edges) {
  WeightedGraph g(n);
  for (const auto& [u, v, w] : edges) g.add_edge(u, v, w);
  return g;
}

inline FaultSet make_faults(int f, std::initializer_list<std::pair<PointId, PointId>> edges) {
  FaultSet out{f, {}};
  for (const auto& [u, v] : edges) out.edges.push_back(EdgeKey::of(u, v));
  return out;
}

inline EuclideanPoints random_planar(std::size_t n, std::uint64_t seed) {
  return generate_points(PointKind::kUniform, n, 2, seed);
}

}  // namespace ftspan::testing
