#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "ftspan/graph.hpp"
#include "ftspan/metric.hpp"
#include "ftspan/shortest_paths.hpp"

namespace ftspan {

enum class Coverage { kExhaustive, kSampled };

std::string_view to_string(Coverage c);

// Worst ratio delta_{G\F}(p,q) / delta_{K\F}(p,q) over pairs and fault sets,
// together with the pair and fault set attaining it.
struct StretchReport {
  double max_ratio = 1.0;
  PointId witness_p = 0;
  PointId witness_q = 0;
  FaultSet witness_fault;
  std::size_t pairs_checked = 0;
  std::size_t faults_checked = 0;
  Coverage mode = Coverage::kExhaustive;
  // Set when some pair is connected in K\F but not in G\F (max_ratio = +inf).
  bool unreachable = false;
};

// Result for a single fault set.
struct FaultStretch {
  double max_ratio = 1.0;
  PointId p = 0;
  PointId q = 0;
  // Sum of the finite pair ratios; a secondary score for the adversary.
  double ratio_sum = 0.0;
  std::size_t pairs = 0;
};

// Evaluates stretch for many fault sets of one (graph, metric) instance.
// Owns its scratch space; use one evaluator per thread.
class StretchEvaluator {
 public:
  // Throws kBadParams when the vertex counts differ.
  StretchEvaluator(const WeightedGraph& g, const Metric& m);

  FaultStretch evaluate(std::span<const EdgeId> fault_ids);

  // Up to this many points evaluate() runs Floyd-Warshall on dense tables
  // instead of one Dijkstra per source.
  static constexpr std::size_t kDenseLimit = 16;

  const WeightedGraph& graph() const { return g_; }
  const Metric& metric() const { return m_; }

 private:
  const WeightedGraph& g_;
  const Metric& m_;
  std::vector<std::uint8_t> mask_;
  std::vector<EdgeKey> keys_;
  FaultAdjacency fault_adj_;
  DijkstraWorkspace spanner_ws_;
  HostWorkspace host_ws_;
  std::vector<double> dense_spanner_;
  std::vector<double> dense_host_;

  FaultStretch evaluate_dense(std::span<const EdgeId> fault_ids);
};

// Stretch of g under one fault set; the denominator is the complete graph on
// m minus the same fault edges. Sources are processed in parallel.
// Throws kFaultNotSubset.
StretchReport stretch(const WeightedGraph& g, const FaultSet& fault, const Metric& m);

}  // namespace ftspan
