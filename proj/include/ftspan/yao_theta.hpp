#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

#include "ftspan/graph.hpp"
#include "ftspan/metric.hpp"

namespace ftspan {

// k = ceil(2*pi/theta) equal planar sectors with apex at the origin. Sector i
// covers directions [i*w, (i+1)*w) with w = 2*pi/k; its ray is the bisector.
class ConeCover {
 public:
  // Throws kThetaOutOfRange unless 0 < theta < pi/4.
  explicit ConeCover(double theta);

  double theta() const noexcept { return theta_; }
  std::size_t size() const noexcept { return k_; }
  double width() const noexcept { return width_; }
  double start(std::size_t cone) const { return static_cast<double>(cone) * width_; }
  double bisector(std::size_t cone) const { return start(cone) + 0.5 * width_; }

  // Sector containing the direction of (dx, dy) != (0, 0). Directions within
  // 1e-12 rad of a boundary go to the sector starting there.
  std::size_t cone_of(double dx, double dy) const;

 private:
  double theta_;
  std::size_t k_;
  double width_;
};

ConeCover cone_cover_2d(double theta);

// Largest theta < pi/4 with 1/(cos theta - sin theta) <= 1 + eps.
// Throws kEpsOutOfRange unless eps > 0.
double theta_for_eps(double eps);

// 1 / (cos theta - sin theta).
double cone_stretch_bound(double theta);

// Upper bound ceil(2*pi/theta) * (2f+1) * n on the edge count of both graphs.
std::size_t cone_edge_bound(double theta, int f, std::size_t n);

// Per point p and cone C: edges to the min(2f+1, |S_{p,C}|) points of S_{p,C}
// nearest to p (ties by PointId). Throws kDimensionMismatch unless dim == 2,
// kThetaOutOfRange, kFOutOfRange.
WeightedGraph yao_graph(const EuclideanPoints& pts, double theta, int f);

// As yao_graph, ranking by the length of the projection onto the cone's
// bisector ray translated to p.
WeightedGraph theta_graph(const EuclideanPoints& pts, double theta, int f);

// Projection length of (q - p) onto the bisector of `cone`.
double cone_projection(const ConeCover& cover, std::size_t cone, const EuclideanPoints& pts,
                       PointId p, PointId q);

}  // namespace ftspan
