#include "ftspan/stretch.hpp"

#include <algorithm>
#include <cmath>

#include "ftspan/error.hpp"

namespace ftspan {
namespace {

struct SourceResult {
  double max_ratio = 0.0;
  PointId q = 0;
  double ratio_sum = 0.0;
  std::size_t pairs = 0;
  bool any = false;
};

// Ratios for all pairs (p, q) with q > p. A pair that is not faulted has host
// distance |pq| because the direct edge survives and is a shortest path in a
// metric; faulted pairs need a Dijkstra on K \ F.
void offer_pair(SourceResult& out, double spanner, double host, PointId q) {
  if (host == kInfinity && spanner == kInfinity) return;
  const double ratio = spanner / host;
  ++out.pairs;
  if (std::isfinite(ratio)) out.ratio_sum += ratio;
  if (!out.any || ratio > out.max_ratio) {
    out.max_ratio = ratio;
    out.q = q;
    out.any = true;
  }
}

void floyd_warshall(std::vector<double>& d, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    const double* row_k = d.data() + k * n;
    for (std::size_t i = 0; i < n; ++i) {
      double* row_i = d.data() + i * n;
      const double dik = row_i[k];
      if (dik == kInfinity) continue;
      for (std::size_t j = 0; j < n; ++j) row_i[j] = std::min(row_i[j], dik + row_k[j]);
    }
  }
}

SourceResult evaluate_source(const WeightedGraph& g, const Metric& m,
                             std::span<const std::uint8_t> mask, const FaultAdjacency& faults,
                             PointId p, DijkstraWorkspace& spanner_ws, HostWorkspace& host_ws) {
  SourceResult out;
  const auto n = static_cast<PointId>(g.vertex_count());
  if (p + 1 >= n) return out;
  spanner_ws.run(g, mask, p);
  bool host_ready = false;
  const auto& faulted = faults[p];
  // With a single faulted partner the host search can stop once it is settled.
  const auto after_p = [p](PointId q) { return q > p; };
  std::optional<PointId> target;
  if (std::count_if(faulted.begin(), faulted.end(), after_p) == 1) {
    target = *std::find_if(faulted.begin(), faulted.end(), after_p);
  }
  for (PointId q = p + 1; q < n; ++q) {
    double host = m.dist(p, q);
    if (std::find(faulted.begin(), faulted.end(), q) != faulted.end()) {
      if (!host_ready) {
        host_ws.run(m.matrix(), faults, p, target);
        host_ready = true;
      }
      host = host_ws.dist[q];
    }
    offer_pair(out, spanner_ws.dist[q], host, q);
  }
  return out;
}

void merge(FaultStretch& acc, const SourceResult& r, PointId p) {
  acc.pairs += r.pairs;
  acc.ratio_sum += r.ratio_sum;
  if (r.any && (acc.pairs == r.pairs || r.max_ratio > acc.max_ratio)) {
    acc.max_ratio = r.max_ratio;
    acc.p = p;
    acc.q = r.q;
  }
}

void check_sizes(const WeightedGraph& g, const Metric& m) {
  if (g.vertex_count() != m.size()) {
    throw Error(ErrorCode::kBadParams, "graph has " + std::to_string(g.vertex_count()) +
                                           " vertices but metric has " +
                                           std::to_string(m.size()) + " points");
  }
}

}  // namespace

std::string_view to_string(Coverage c) {
  return c == Coverage::kExhaustive ? "exhaustive" : "sampled";
}

StretchEvaluator::StretchEvaluator(const WeightedGraph& g, const Metric& m)
    : g_(g), m_(m), mask_(g.edge_count(), 0), fault_adj_(g.vertex_count()) {
  check_sizes(g, m);
}

FaultStretch StretchEvaluator::evaluate(std::span<const EdgeId> fault_ids) {
  if (g_.vertex_count() <= kDenseLimit) return evaluate_dense(fault_ids);
  for (EdgeId id : fault_ids) {
    mask_[id] = 1;
    const Edge& e = g_.edge(id);
    fault_adj_[e.u].push_back(e.v);
    fault_adj_[e.v].push_back(e.u);
  }
  FaultStretch acc;
  const auto n = static_cast<PointId>(g_.vertex_count());
  for (PointId p = 0; p < n; ++p) {
    merge(acc, evaluate_source(g_, m_, mask_, fault_adj_, p, spanner_ws_, host_ws_), p);
  }
  for (EdgeId id : fault_ids) {
    mask_[id] = 0;
    const Edge& e = g_.edge(id);
    fault_adj_[e.u].clear();
    fault_adj_[e.v].clear();
  }
  return acc;
}

// Same pairs, order and witness rule as the per-source path.
FaultStretch StretchEvaluator::evaluate_dense(std::span<const EdgeId> fault_ids) {
  const std::size_t n = g_.vertex_count();
  for (EdgeId id : fault_ids) mask_[id] = 1;
  dense_spanner_.assign(n * n, kInfinity);
  for (std::size_t i = 0; i < n; ++i) dense_spanner_[i * n + i] = 0.0;
  for (EdgeId id = 0; id < g_.edge_count(); ++id) {
    if (mask_[id]) continue;
    const Edge& e = g_.edge(id);
    double& uv = dense_spanner_[e.u * n + e.v];
    uv = std::min(uv, e.w);
    dense_spanner_[e.v * n + e.u] = uv;
  }
  for (EdgeId id : fault_ids) mask_[id] = 0;
  floyd_warshall(dense_spanner_, n);
  if (!fault_ids.empty()) {
    const auto& d = m_.matrix();
    dense_host_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = d.row(static_cast<PointId>(i));
      std::copy(row.begin(), row.end(), dense_host_.begin() + static_cast<std::ptrdiff_t>(i * n));
    }
    for (EdgeId id : fault_ids) {
      const Edge& e = g_.edge(id);
      dense_host_[e.u * n + e.v] = kInfinity;
      dense_host_[e.v * n + e.u] = kInfinity;
    }
    floyd_warshall(dense_host_, n);
  }
  // A pair keeps host distance |pq| unless its own edge is faulted.
  auto faulted = [&](PointId p, PointId q) {
    for (EdgeId id : fault_ids) {
      const Edge& e = g_.edge(id);
      if ((e.u == p && e.v == q) || (e.u == q && e.v == p)) return true;
    }
    return false;
  };
  FaultStretch acc;
  for (PointId p = 0; p + 1 < n; ++p) {
    SourceResult r;
    for (PointId q = p + 1; q < n; ++q) {
      const double host = faulted(p, q) ? dense_host_[p * n + q] : m_.dist(p, q);
      offer_pair(r, dense_spanner_[p * n + q], host, q);
    }
    merge(acc, r, p);
  }
  return acc;
}

StretchReport stretch(const WeightedGraph& g, const FaultSet& fault, const Metric& m) {
  check_sizes(g, m);
  const auto mask = fault_mask(g, fault);
  const auto faults = fault_adjacency(g.vertex_count(), fault.edges);
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  std::vector<SourceResult> per_source(g.vertex_count());
#pragma omp parallel
  {
    DijkstraWorkspace spanner_ws;
    HostWorkspace host_ws;
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t p = 0; p < n; ++p) {
      per_source[p] = evaluate_source(g, m, mask, faults, static_cast<PointId>(p), spanner_ws,
                                      host_ws);
    }
  }
  FaultStretch acc;
  for (std::int64_t p = 0; p < n; ++p) merge(acc, per_source[p], static_cast<PointId>(p));

  StretchReport report;
  report.max_ratio = acc.max_ratio;
  report.witness_p = acc.p;
  report.witness_q = acc.q;
  report.witness_fault = fault;
  std::sort(report.witness_fault.edges.begin(), report.witness_fault.edges.end());
  report.pairs_checked = acc.pairs;
  report.faults_checked = 1;
  report.unreachable = std::isinf(acc.max_ratio);
  return report;
}

}  // namespace ftspan
