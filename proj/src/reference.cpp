#include "ftspan/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ftspan/error.hpp"

namespace ftspan::reference {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void close(DistanceMatrix<double>& d) {
  const auto n = static_cast<PointId>(d.size());
  for (PointId k = 0; k < n; ++k) {
    for (PointId i = 0; i < n; ++i) {
      for (PointId j = 0; j < n; ++j) {
        if (d(i, k) + d(k, j) < d(i, j)) d(i, j) = d(i, k) + d(k, j);
      }
    }
  }
}

bool contains(const FaultSet& fault, PointId a, PointId b) {
  const EdgeKey key = EdgeKey::of(a, b);
  return std::find(fault.edges.begin(), fault.edges.end(), key) != fault.edges.end();
}

}  // namespace

DistanceMatrix<double> spanner_distances(const WeightedGraph& g, const FaultSet& fault) {
  for (const EdgeKey& e : fault.edges) {
    if (e.u >= g.vertex_count() || e.v >= g.vertex_count() || !g.has_edge(e.u, e.v)) {
      throw Error(ErrorCode::kFaultNotSubset, "fault edge not in graph");
    }
  }
  const auto n = static_cast<PointId>(g.vertex_count());
  DistanceMatrix<double> d(n, kInf);
  for (PointId p = 0; p < n; ++p) d(p, p) = 0.0;
  for (const Edge& e : g.edges()) {
    if (contains(fault, e.u, e.v)) continue;
    d(e.u, e.v) = e.w;
    d(e.v, e.u) = e.w;
  }
  close(d);
  return d;
}

DistanceMatrix<double> host_distances(const Metric& m, const FaultSet& fault) {
  const auto n = static_cast<PointId>(m.size());
  DistanceMatrix<double> d(n, kInf);
  for (PointId p = 0; p < n; ++p) {
    for (PointId q = 0; q < n; ++q) {
      if (p == q) d(p, q) = 0.0;
      else if (!contains(fault, p, q)) d(p, q) = m.dist(p, q);
    }
  }
  close(d);
  return d;
}

FaultStretch stretch(const WeightedGraph& g, const FaultSet& fault, const Metric& m) {
  const auto spanner = spanner_distances(g, fault);
  const auto host = host_distances(m, fault);
  FaultStretch out;
  bool first = true;
  const auto n = static_cast<PointId>(m.size());
  for (PointId p = 0; p < n; ++p) {
    for (PointId q = p + 1; q < n; ++q) {
      if (spanner(p, q) == kInf && host(p, q) == kInf) continue;
      const double ratio = spanner(p, q) / host(p, q);
      ++out.pairs;
      if (std::isfinite(ratio)) out.ratio_sum += ratio;
      if (first || ratio > out.max_ratio) {
        out.max_ratio = ratio;
        out.p = p;
        out.q = q;
        first = false;
      }
    }
  }
  return out;
}

std::vector<FaultSet> fault_sets_by_power_set(const WeightedGraph& g, int f) {
  const std::size_t m = g.edge_count();
  if (m > 24) throw Error(ErrorCode::kBadParams, "power-set enumeration needs |E| <= 24");
  std::vector<FaultSet> out;
  const auto keys = g.edge_keys();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    FaultSet set{f, {}};
    for (std::size_t i = 0; i < m; ++i) {
      if (bits >> i & 1) set.edges.push_back(keys[i]);
    }
    if (max_fault_degree(set.edges, g.vertex_count()) <= f) {
      std::sort(set.edges.begin(), set.edges.end());
      out.push_back(std::move(set));
    }
  }
  return out;
}

VerificationReport verify(const WeightedGraph& g, const Metric& m, double claimed_t,
                          const std::vector<FaultSet>& fault_sets) {
  VerificationReport report;
  report.claimed_t = claimed_t;
  report.mode = "reference";
  bool first = true;
  for (const FaultSet& fault : fault_sets) {
    const FaultStretch s = reference::stretch(g, fault, m);
    report.observed.pairs_checked += s.pairs;
    ++report.observed.faults_checked;
    if (first || s.max_ratio > report.observed.max_ratio) {
      report.observed.max_ratio = s.max_ratio;
      report.observed.witness_p = s.p;
      report.observed.witness_q = s.q;
      report.observed.witness_fault = fault;
      first = false;
    }
  }
  report.observed.unreachable = std::isinf(report.observed.max_ratio);
  report.coverage_count = report.observed.faults_checked;
  report.pass = within_claim(report.observed.max_ratio, claimed_t);
  return report;
}

}  // namespace ftspan::reference
