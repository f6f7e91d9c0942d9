#include "ftspan/yao_theta.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ftspan/error.hpp"
#include "ftspan/spanner_general.hpp"

namespace ftspan {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kBoundaryTol = 1e-12;

enum class Ranking { kDistance, kProjection };

WeightedGraph cone_graph(const EuclideanPoints& pts, double theta, int f, Ranking ranking) {
  if (pts.dim() != 2) {
    throw Error(ErrorCode::kDimensionMismatch, "cone graphs need planar points (dim = 2)");
  }
  if (f < 0) throw Error(ErrorCode::kFOutOfRange, "f must be >= 0");
  const ConeCover cover(theta);
  const auto n = static_cast<PointId>(pts.size());
  const std::size_t keep = 2 * static_cast<std::size_t>(f) + 1;
  std::vector<std::vector<EdgeKey>> per_point(n);
#pragma omp parallel for schedule(dynamic, 8) if (n > 256)
  for (std::int64_t pi = 0; pi < static_cast<std::int64_t>(n); ++pi) {
    const auto p = static_cast<PointId>(pi);
    std::vector<std::vector<std::pair<double, PointId>>> buckets(cover.size());
    for (PointId q = 0; q < n; ++q) {
      if (q == p) continue;
      const double dx = pts[q][0] - pts[p][0];
      const double dy = pts[q][1] - pts[p][1];
      const std::size_t cone = cover.cone_of(dx, dy);
      const double rank = ranking == Ranking::kDistance ? std::hypot(dx, dy)
                                                        : cone_projection(cover, cone, pts, p, q);
      buckets[cone].push_back({rank, q});
    }
    for (auto& bucket : buckets) {
      const std::size_t take = std::min(keep, bucket.size());
      std::partial_sort(bucket.begin(), bucket.begin() + static_cast<std::ptrdiff_t>(take),
                        bucket.end());
      for (std::size_t i = 0; i < take; ++i) {
        per_point[p].push_back(EdgeKey::of(p, bucket[i].second));
      }
    }
  }
  std::vector<EdgeKey> keys;
  for (const auto& list : per_point) keys.insert(keys.end(), list.begin(), list.end());
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  WeightedGraph g(n);
  for (const EdgeKey& k : keys) g.add_edge(k.u, k.v, pts.distance(k.u, k.v));
  return g;
}

}  // namespace

ConeCover::ConeCover(double theta) : theta_(theta) {
  if (!(theta > 0.0) || !(theta < std::numbers::pi / 4.0)) {
    throw Error(ErrorCode::kThetaOutOfRange,
                "theta must lie in (0, pi/4), got " + std::to_string(theta));
  }
  k_ = static_cast<std::size_t>(std::ceil(kTwoPi / theta));
  width_ = kTwoPi / static_cast<double>(k_);
}

std::size_t ConeCover::cone_of(double dx, double dy) const {
  double angle = std::atan2(dy, dx);
  if (angle < 0.0) angle += kTwoPi;
  const double x = angle / width_;
  const double nearest = std::round(x);
  std::size_t cone;
  if (std::abs(angle - nearest * width_) <= kBoundaryTol) {
    cone = static_cast<std::size_t>(nearest);
  } else {
    cone = static_cast<std::size_t>(std::floor(x));
  }
  return cone % k_;
}

ConeCover cone_cover_2d(double theta) { return ConeCover(theta); }

double theta_for_eps(double eps) {
  if (!(eps > 0.0)) throw Error(ErrorCode::kEpsOutOfRange, "eps must be positive");
  const double quarter = std::numbers::pi / 4.0;
  const double theta = std::acos(1.0 / (std::numbers::sqrt2 * (1.0 + eps))) - quarter;
  return std::min(theta, quarter - 1e-12);
}

double cone_stretch_bound(double theta) { return 1.0 / (std::cos(theta) - std::sin(theta)); }

std::size_t cone_edge_bound(double theta, int f, std::size_t n) {
  return ConeCover(theta).size() * (2 * static_cast<std::size_t>(f) + 1) * n;
}

double cone_projection(const ConeCover& cover, std::size_t cone, const EuclideanPoints& pts,
                       PointId p, PointId q) {
  const double ray = cover.bisector(cone);
  return (pts[q][0] - pts[p][0]) * std::cos(ray) + (pts[q][1] - pts[p][1]) * std::sin(ray);
}

WeightedGraph yao_graph(const EuclideanPoints& pts, double theta, int f) {
  return cone_graph(pts, theta, f, Ranking::kDistance);
}

WeightedGraph theta_graph(const EuclideanPoints& pts, double theta, int f) {
  return cone_graph(pts, theta, f, Ranking::kProjection);
}

}  // namespace ftspan
