#include "ftspan/generators.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "ftspan/error.hpp"

namespace ftspan {

double unit_uniform(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

PointKind parse_point_kind(const std::string& name) {
  if (name == "uniform") return PointKind::kUniform;
  if (name == "clustered") return PointKind::kClustered;
  if (name == "circle") return PointKind::kCircle;
  if (name == "grid") return PointKind::kGrid;
  throw Error(ErrorCode::kBadParams, "unknown point kind '" + name + "'");
}

EuclideanPoints generate_points(PointKind kind, std::size_t n, std::size_t dim,
                                std::uint64_t seed) {
  if (n < 1 || dim < 1) throw Error(ErrorCode::kBadParams, "need n >= 1 and dim >= 1");
  std::mt19937_64 rng(seed);
  auto uniform = [&] { return unit_uniform(rng()); };
  std::vector<double> coords(n * dim, 0.0);
  switch (kind) {
    case PointKind::kUniform:
      for (double& c : coords) c = uniform();
      break;
    case PointKind::kClustered: {
      const auto clusters =
          static_cast<std::size_t>(std::max(1.0, std::sqrt(static_cast<double>(n))));
      std::vector<double> centres(clusters * dim);
      for (double& c : centres) c = uniform();
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t k = rng() % clusters;
        for (std::size_t j = 0; j < dim; ++j) {
          // Box-Muller keeps the stream identical across standard libraries.
          const double u1 = 1.0 - uniform();
          const double u2 = uniform();
          const double gauss =
              std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
          coords[i * dim + j] = centres[k * dim + j] + 0.05 * gauss;
        }
      }
      break;
    }
    case PointKind::kCircle:
      if (dim < 2) throw Error(ErrorCode::kBadParams, "circle points need dim >= 2");
      for (std::size_t i = 0; i < n; ++i) {
        const double angle =
            2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
        coords[i * dim] = std::cos(angle);
        coords[i * dim + 1] = std::sin(angle);
      }
      break;
    case PointKind::kGrid: {
      // Smallest side with side^dim >= n.
      std::size_t side = 1;
      auto capacity = [&](std::size_t s) {
        std::size_t total = 1;
        for (std::size_t j = 0; j < dim && total < n; ++j) total *= s;
        return total;
      };
      while (capacity(side) < n) ++side;
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t rest = i;
        for (std::size_t j = dim; j-- > 0;) {
          coords[i * dim + j] = static_cast<double>(rest % side);
          rest /= side;
        }
      }
      break;
    }
  }
  return EuclideanPoints(dim, std::move(coords));
}

Metric random_explicit_metric(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  DistanceMatrix<double> d(n);
  for (PointId p = 0; p < n; ++p) {
    for (PointId q = p + 1; q < n; ++q) {
      d(p, q) = 1.0 + unit_uniform(rng());
      d(q, p) = d(p, q);
    }
  }
  return explicit_from_matrix(std::move(d));
}

Metric random_closure_metric(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  WeightedGraph g(n);
  // Weights on a 2^-20 grid keep every path sum exact, so the closure is an
  // exact metric and summation order never matters.
  auto weight = [&] {
    return std::ldexp(std::floor((0.1 + 0.9 * unit_uniform(rng())) * 0x1p20), -20);
  };
  // Random spanning tree, then extra edges.
  for (PointId v = 1; v < n; ++v) g.add_edge(static_cast<PointId>(rng() % v), v, weight());
  for (std::size_t extra = 0; extra < n; ++extra) {
    const auto a = static_cast<PointId>(rng() % n);
    const auto b = static_cast<PointId>(rng() % n);
    if (a != b) g.add_edge(a, b, weight());
  }
  return graph_closure_metric(g);
}

}  // namespace ftspan
