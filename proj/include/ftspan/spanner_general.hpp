#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ftspan/distance_matrix.hpp"
#include "ftspan/error.hpp"
#include "ftspan/graph.hpp"
#include "ftspan/metric.hpp"

namespace ftspan {

// The detour points C_ab of a base edge {a, b}: the min(2f-1, n-2) points c
// with the smallest |ac| + |cb|, ties broken by PointId.
struct DetourSet {
  EdgeKey edge;
  std::vector<PointId> candidates;
};

// Greedy t-spanner: pairs in non-decreasing (|pq|, min id, max id) order,
// {p,q} added iff the current graph distance exceeds t * |pq|.
// Throws kBadParams when t < 1.
WeightedGraph greedy_spanner(const Metric& m, double t);

template <class T>
DetourSet detour_candidates(const DistanceMatrix<T>& d, PointId a, PointId b, int f) {
  if (a == b) throw Error(ErrorCode::kBadParams, "detour endpoints must differ");
  if (f < 1) throw Error(ErrorCode::kFOutOfRange, "detour sets need f >= 1");
  const auto n = static_cast<PointId>(d.size());
  std::vector<PointId> others;
  others.reserve(n);
  for (PointId c = 0; c < n; ++c) {
    if (c != a && c != b) others.push_back(c);
  }
  const std::size_t keep =
      std::min<std::size_t>(2 * static_cast<std::size_t>(f) - 1, others.size());
  auto by_detour = [&](PointId x, PointId y) {
    const T sx = d(a, x) + d(x, b);
    const T sy = d(a, y) + d(y, b);
    if (sx != sy) return sx < sy;
    return x < y;
  };
  std::partial_sort(others.begin(), others.begin() + static_cast<std::ptrdiff_t>(keep),
                    others.end(), by_detour);
  others.resize(keep);
  return DetourSet{EdgeKey::of(a, b), std::move(others)};
}

// Detour fortification of a base spanner: every base edge {a,b} keeps itself
// and gains the edges {a,c}, {c,b} for c in C_ab. Output keys are sorted and
// unique. Throws kFOutOfRange unless 1 <= f <= (n-1)/2.
template <class T>
std::vector<EdgeKey> fortify_edges(const DistanceMatrix<T>& d, std::span<const EdgeKey> base,
                                   int f, std::vector<DetourSet>* detours = nullptr) {
  const std::size_t n = d.size();
  if (f < 1 || n < 3 || 2 * static_cast<std::size_t>(f) > n - 1) {
    throw Error(ErrorCode::kFOutOfRange,
                "fortify needs 1 <= f <= (n-1)/2, got f=" + std::to_string(f) +
                    " with n=" + std::to_string(n));
  }
  std::vector<DetourSet> sets(base.size());
  // Per-edge work is independent; the union below is order-independent.
#pragma omp parallel for schedule(dynamic, 8) if (base.size() > 64)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(base.size()); ++i) {
    sets[i] = detour_candidates(d, base[i].u, base[i].v, f);
  }
  std::vector<EdgeKey> out(base.begin(), base.end());
  for (const DetourSet& s : sets) {
    for (PointId c : s.candidates) {
      out.push_back(EdgeKey::of(s.edge.u, c));
      out.push_back(EdgeKey::of(c, s.edge.v));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (detours) *detours = std::move(sets);
  return out;
}

inline DetourSet detour_candidates(const Metric& m, PointId a, PointId b, int f) {
  return detour_candidates(m.matrix(), a, b, f);
}

struct FortifiedSpanner {
  WeightedGraph graph;
  std::vector<DetourSet> detours;
};

FortifiedSpanner fortify_with_detours(const Metric& m, const WeightedGraph& base, int f);

WeightedGraph fortify(const Metric& m, const WeightedGraph& base, int f);

// Checks that every faulted base edge keeps a detour c in C_ab with both
// {a,c} and {c,b} outside the fault set. `faulted` holds sorted keys.
bool detours_survive(std::span<const DetourSet> detours, std::span<const EdgeKey> faulted);

// Graph on m's points containing exactly `keys`, weighted by m.
WeightedGraph metric_graph(const Metric& m, std::span<const EdgeKey> keys);

}  // namespace ftspan
