#include "ftspan/metric.hpp"

#include <cmath>
#include <limits>

#include "ftspan/shortest_paths.hpp"

namespace ftspan {
namespace {

std::string ids(std::initializer_list<PointId> list) {
  std::string out = "(";
  for (PointId p : list) {
    if (out.size() > 1) out += ",";
    out += std::to_string(p);
  }
  return out + ")";
}

}  // namespace

EuclideanPoints::EuclideanPoints(std::size_t dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
  if (dim_ == 0 || coords_.size() % dim_ != 0) {
    throw Error(ErrorCode::kDimensionMismatch,
                "coordinate count is not a multiple of dim=" + std::to_string(dim_));
  }
  for (double c : coords_) {
    if (!std::isfinite(c)) throw Error(ErrorCode::kNonFinite, "non-finite coordinate");
  }
}

EuclideanPoints EuclideanPoints::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw Error(ErrorCode::kDimensionMismatch, "empty point set");
  const std::size_t dim = rows.front().size();
  std::vector<double> flat;
  flat.reserve(rows.size() * dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                      " coordinates, expected " + std::to_string(dim));
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return EuclideanPoints(dim, std::move(flat));
}

double EuclideanPoints::distance(PointId p, PointId q) const {
  const auto a = (*this)[p];
  const auto b = (*this)[q];
  double sum = 0.0;
  for (std::size_t k = 0; k < dim_; ++k) {
    const double d = a[k] - b[k];
    sum += d * d;
  }
  return std::sqrt(sum);
}

void ValidationResult::throw_if_invalid() const {
  if (ok()) return;
  const Violation& v = violations.front();
  throw Error(v.kind, v.detail);
}

ValidationResult verify_distance_matrix(const DistanceMatrix<double>& d) {
  ValidationResult result;
  const auto n = static_cast<PointId>(d.size());
  auto report = [&](ErrorCode code, std::vector<PointId> where, std::string detail) {
    result.violations.push_back({code, std::move(where), std::move(detail)});
    return result;
  };
  for (PointId p = 0; p < n; ++p) {
    for (PointId q = 0; q < n; ++q) {
      if (!std::isfinite(d(p, q))) {
        return report(ErrorCode::kNonFinite, {p, q}, "entry " + ids({p, q}) + " is not finite");
      }
    }
  }
  for (PointId p = 0; p < n; ++p) {
    if (d(p, p) != 0.0) {
      return report(ErrorCode::kNonzeroDiagonal, {p}, "dist" + ids({p, p}) + " != 0");
    }
  }
  for (PointId p = 0; p < n; ++p) {
    for (PointId q = 0; q < n; ++q) {
      if (d(p, q) < 0.0) {
        return report(ErrorCode::kNegativeDistance, {p, q}, "dist" + ids({p, q}) + " < 0");
      }
    }
  }
  for (PointId p = 0; p < n; ++p) {
    for (PointId q = p + 1; q < n; ++q) {
      if (d(p, q) != d(q, p)) {
        return report(ErrorCode::kNonSymmetric, {p, q},
                      "dist" + ids({p, q}) + " != dist" + ids({q, p}));
      }
      if (d(p, q) == 0.0) {
        return report(ErrorCode::kIdentityViolation, {p, q},
                      "distinct points " + ids({p, q}) + " at distance 0");
      }
    }
  }
  for (PointId p = 0; p < n; ++p) {
    for (PointId q = p + 1; q < n; ++q) {
      for (PointId r = 0; r < n; ++r) {
        if (r == p || r == q) continue;
        if (d(p, q) > (d(p, r) + d(r, q)) * (1.0 + kTriangleSlack)) {
          return report(ErrorCode::kTriangleViolation, {p, q, r},
                        "dist" + ids({p, q}) + " exceeds path through " + std::to_string(r) +
                            " at " + ids({p, q, r}));
        }
      }
    }
  }
  return result;
}

ValidationResult verify_metric(const Metric& m) { return verify_distance_matrix(m.matrix()); }

Metric explicit_from_matrix(DistanceMatrix<double> matrix) {
  verify_distance_matrix(matrix).throw_if_invalid();
  return Metric(MetricKind::kExplicit, std::move(matrix));
}

Metric explicit_from_matrix(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  DistanceMatrix<double> matrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "matrix row " + std::to_string(i) + " has length " +
                      std::to_string(rows[i].size()) + ", expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      matrix(static_cast<PointId>(i), static_cast<PointId>(j)) = rows[i][j];
    }
  }
  return explicit_from_matrix(std::move(matrix));
}

Metric euclidean_metric(const EuclideanPoints& points) {
  const auto n = static_cast<PointId>(points.size());
  DistanceMatrix<double> table(n);
  for (PointId p = 0; p < n; ++p) {
    for (PointId q = p + 1; q < n; ++q) {
      const double d = points.distance(p, q);
      table(p, q) = d;
      table(q, p) = d;
    }
  }
  return Metric(MetricKind::kEuclidean, std::move(table), points);
}

Metric graph_closure_metric(const WeightedGraph& g) {
  const auto n = static_cast<PointId>(g.vertex_count());
  DistanceMatrix<double> table(n);
  DijkstraWorkspace ws;
  for (PointId s = 0; s < n; ++s) {
    ws.run(g, {}, s);
    for (PointId v = 0; v < n; ++v) {
      if (!std::isfinite(ws.dist[v])) {
        throw Error(ErrorCode::kDisconnected,
                    "no path between " + std::to_string(s) + " and " + std::to_string(v));
      }
      table(s, v) = ws.dist[v];
    }
  }
  // Dijkstra from both ends can differ in the last ulp; keep the table symmetric.
  for (PointId p = 0; p < n; ++p) {
    for (PointId q = p + 1; q < n; ++q) {
      const double d = std::min(table(p, q), table(q, p));
      table(p, q) = d;
      table(q, p) = d;
    }
  }
  return Metric(MetricKind::kGraphClosure, std::move(table));
}

WeightedGraph complete_graph(const Metric& m) {
  const auto n = static_cast<PointId>(m.size());
  WeightedGraph g(n);
  for (PointId p = 0; p < n; ++p) {
    for (PointId q = p + 1; q < n; ++q) g.add_edge(p, q, m.dist(p, q));
  }
  return g;
}

WeightedGraph unit_disk_graph(const EuclideanPoints& points) {
  const auto n = static_cast<PointId>(points.size());
  WeightedGraph g(n);
  for (PointId p = 0; p < n; ++p) {
    for (PointId q = p + 1; q < n; ++q) {
      const double d = points.distance(p, q);
      if (d <= 1.0 && d > 0.0) g.add_edge(p, q, d);
    }
  }
  return g;
}

}  // namespace ftspan
