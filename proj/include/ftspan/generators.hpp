#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "ftspan/metric.hpp"

namespace ftspan {

enum class PointKind { kUniform, kClustered, kCircle, kGrid };

// Throws kBadParams for unknown names.
PointKind parse_point_kind(const std::string& name);

// Deterministic point sets: uniform in [0,1)^dim; clustered around sqrt(n)
// uniform centres; n equally spaced points on the unit circle (remaining
// coordinates zero); the first n points of the integer grid with
// ceil(n^(1/dim)) points per side. Throws kBadParams when n < 1 or dim < 1,
// or dim < 2 for circles.
EuclideanPoints generate_points(PointKind kind, std::size_t n, std::size_t dim,
                                std::uint64_t seed);

// Symmetric matrix with off-diagonal entries uniform in [1, 2); every such
// matrix is a metric.
Metric random_explicit_metric(std::size_t n, std::uint64_t seed);

// Shortest-path metric of a random connected graph with weights in [0.1, 1),
// rounded down to multiples of 2^-20 so all path sums are exact.
Metric random_closure_metric(std::size_t n, std::uint64_t seed);

// Uniform double in [0, 1) from 53 random bits.
double unit_uniform(std::uint64_t bits);

}  // namespace ftspan
