#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ftspan/distance_matrix.hpp"
#include "ftspan/error.hpp"
#include "ftspan/graph.hpp"

namespace ftspan {

// n points in R^dim, stored row-major.
class EuclideanPoints {
 public:
  EuclideanPoints() = default;
  // Throws kDimensionMismatch if dim == 0 or coords.size() is not a multiple
  // of dim, kNonFinite on NaN/inf coordinates.
  EuclideanPoints(std::size_t dim, std::vector<double> coords);

  // Throws kDimensionMismatch on ragged input.
  static EuclideanPoints from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  std::span<const double> operator[](PointId p) const {
    return {coords_.data() + static_cast<std::size_t>(p) * dim_, dim_};
  }
  std::span<const double> coords() const { return coords_; }

  double distance(PointId p, PointId q) const;

  bool operator==(const EuclideanPoints&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
};

enum class MetricKind { kExplicit, kEuclidean, kGraphClosure };

// Immutable finite metric space. All kinds keep a dense distance table, so
// queries are O(1) and thread-safe.
class Metric {
 public:
  Metric() = default;

  std::size_t size() const noexcept { return table_.size(); }
  MetricKind kind() const noexcept { return kind_; }
  double dist(PointId p, PointId q) const { return table_(p, q); }
  const DistanceMatrix<double>& matrix() const { return table_; }
  const std::optional<EuclideanPoints>& points() const { return points_; }

 private:
  Metric(MetricKind kind, DistanceMatrix<double> table,
         std::optional<EuclideanPoints> points = std::nullopt)
      : kind_(kind), table_(std::move(table)), points_(std::move(points)) {}

  friend Metric explicit_from_matrix(DistanceMatrix<double> matrix);
  friend Metric euclidean_metric(const EuclideanPoints& points);
  friend Metric graph_closure_metric(const WeightedGraph& g);

  MetricKind kind_ = MetricKind::kExplicit;
  DistanceMatrix<double> table_;
  std::optional<EuclideanPoints> points_;
};

struct Violation {
  ErrorCode kind;
  std::vector<PointId> where;
  std::string detail;
};

struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  // Throws the first violation as an Error; no-op when ok().
  void throw_if_invalid() const;
};

// Relative slack accepted on the triangle inequality.
inline constexpr double kTriangleSlack = 1e-9;

// Throws on the first violated axiom (kDimensionMismatch, kNonFinite,
// kNonzeroDiagonal, kNegativeDistance, kNonSymmetric, kIdentityViolation,
// kTriangleViolation).
Metric explicit_from_matrix(DistanceMatrix<double> matrix);
Metric explicit_from_matrix(const std::vector<std::vector<double>>& rows);

Metric euclidean_metric(const EuclideanPoints& points);

// All-pairs shortest-path distances of a connected positively weighted graph.
// Throws kDisconnected naming an unreachable pair.
Metric graph_closure_metric(const WeightedGraph& g);

// K_S: every pair {p,q} with weight dist(p,q).
WeightedGraph complete_graph(const Metric& m);

// Edge {p,q} of weight |pq| for every pair with |pq| <= 1.
WeightedGraph unit_disk_graph(const EuclideanPoints& points);

// Checks identity, positivity, symmetry and all n^3 triangle inequalities;
// reports the first violation found.
ValidationResult verify_metric(const Metric& m);
ValidationResult verify_distance_matrix(const DistanceMatrix<double>& matrix);

}  // namespace ftspan
