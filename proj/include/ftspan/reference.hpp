#pragma once

// Serial, deliberately naive counterparts of the parallel kernels. They share
// no code with the fast paths and serve as oracles in tests and as the
// baseline in the benchmarks.

#include <cstdint>
#include <vector>

#include "ftspan/distance_matrix.hpp"
#include "ftspan/faults.hpp"
#include "ftspan/graph.hpp"
#include "ftspan/metric.hpp"
#include "ftspan/stretch.hpp"

namespace ftspan::reference {

// Floyd-Warshall on g minus the fault edges.
DistanceMatrix<double> spanner_distances(const WeightedGraph& g, const FaultSet& fault);

// Floyd-Warshall on the complete graph over m minus the fault edges.
DistanceMatrix<double> host_distances(const Metric& m, const FaultSet& fault);

// max over pairs of the two tables above; witness is the first maximiser.
FaultStretch stretch(const WeightedGraph& g, const FaultSet& fault, const Metric& m);

// Filters all 2^|E| edge subsets by maximum degree. Requires |E| <= 24.
std::vector<FaultSet> fault_sets_by_power_set(const WeightedGraph& g, int f);

// Serial loop of stretch() over explicit fault sets.
VerificationReport verify(const WeightedGraph& g, const Metric& m, double claimed_t,
                          const std::vector<FaultSet>& fault_sets);

}  // namespace ftspan::reference
