#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ftspan/graph.hpp"
#include "ftspan/metric.hpp"
#include "ftspan/stretch.hpp"

namespace ftspan {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'f00d'2024ULL;

// Called with the edge ids of one fault set; return false to stop.
using FaultVisitor = std::function<bool(std::span<const EdgeId>)>;

// Visits every edge subset F of g whose induced maximum degree is <= f exactly
// once, the empty set first, in lexicographic order of sorted edge ids.
// Returns the number of sets visited.
std::uint64_t for_each_fault_set(const WeightedGraph& g, int f, const FaultVisitor& visit);

// Same as for_each_fault_set with f = 1.
std::uint64_t for_each_matching(const WeightedGraph& g, const FaultVisitor& visit);

std::vector<FaultSet> enumerate_fault_sets(const WeightedGraph& g, int f);
std::vector<FaultSet> enumerate_matchings(const WeightedGraph& g);

// Number of degree-<=f fault sets, counting stops at cap + 1.
std::uint64_t count_fault_sets(const WeightedGraph& g, int f, std::uint64_t cap);

// Seeded random greedy: shuffle the edges, add each one whose endpoints both
// have budget left. The result is maximal for that order.
std::vector<EdgeId> sample_fault_ids(const WeightedGraph& g, int f, std::uint64_t seed);
FaultSet sample_fault_set(const WeightedGraph& g, int f, std::uint64_t seed);

// Greedy ascent from the empty set: each round adds the budget-respecting edge
// with the best (max ratio, ratio sum) score, stopping when the score would
// drop, no edge fits, or `rounds` edges were added. Returns the best set seen.
FaultSet adversarial_fault_set(const WeightedGraph& g, int f, const Metric& m, int rounds = 16);

enum class EnumerationMode { kExhaustive, kMatchings, kSampled, kAdversarial };

struct FaultEnumeration {
  EnumerationMode mode = EnumerationMode::kExhaustive;
  // Number of samples in sampled mode; ignored otherwise.
  std::size_t budget = 10'000;
  std::uint64_t seed = kDefaultSeed;
  int rounds = 16;
  // Exhaustive and matchings modes refuse more than this many fault sets and
  // fall back to sampled + adversarial unless allow_large is set.
  std::uint64_t max_exhaustive = 10'000'000;
  bool allow_large = false;
};

// Parses exhaustive | matchings | sample:<k> | adversarial.
FaultEnumeration parse_enumeration(const std::string& text);

struct VerificationReport {
  double claimed_t = 1.0;
  StretchReport observed;
  bool pass = false;
  Coverage coverage = Coverage::kExhaustive;
  std::uint64_t coverage_count = 0;
  std::string mode;
};

// Relative slack on the claimed stretch.
inline constexpr double kPassSlack = 1e-9;

inline bool within_claim(double ratio, double claimed_t) {
  return ratio <= claimed_t * (1.0 + kPassSlack);
}

// Maximum stretch of g over the fault sets of the enumeration, compared
// against claimed_t. Fault sets are evaluated in parallel; the witness is the
// first maximiser in enumeration order, so results do not depend on threads.
VerificationReport verify_faulty_degree_spanner(const WeightedGraph& g, const Metric& m, int f,
                                                double claimed_t,
                                                const FaultEnumeration& enumeration = {});

}  // namespace ftspan
