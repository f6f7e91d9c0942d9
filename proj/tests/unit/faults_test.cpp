#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "ftspan/error.hpp"
#include "ftspan/faults.hpp"
#include "ftspan/lowerbounds.hpp"
#include "ftspan/reference.hpp"
#include "ftspan/spanner_general.hpp"
#include "ftspan/wspd.hpp"
#include "test_support.hpp"

namespace ftspan {
namespace {

using testing::line_metric;
using testing::make_graph;

Metric uniform_metric(std::size_t n) {
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 0.0;
  return explicit_from_matrix(rows);
}

TEST(EnumerateFaultSets, SmallExamples) {
  EXPECT_EQ(enumerate_fault_sets(complete_graph(uniform_metric(3)), 1).size(), 4u);
  const WeightedGraph path = make_graph(3, {{0, 1, 1}, {1, 2, 1}});
  const auto sets = enumerate_fault_sets(path, 1);
  ASSERT_EQ(sets.size(), 3u);
  EXPECT_TRUE(sets[0].edges.empty());
  EXPECT_EQ(enumerate_fault_sets(complete_graph(uniform_metric(4)), 1).size(), 10u);
  EXPECT_EQ(enumerate_matchings(complete_graph(uniform_metric(4))).size(), 10u);
}

TEST(EnumerateFaultSets, AgreesWithPowerSetFilter) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const WeightedGraph k = complete_graph(uniform_metric(n));
    for (int f = 0; f <= 3; ++f) {
      auto fast = enumerate_fault_sets(k, f);
      auto naive = reference::fault_sets_by_power_set(k, f);
      auto as_set = [](const std::vector<FaultSet>& v) {
        std::set<std::vector<EdgeKey>> out;
        for (const auto& s : v) out.insert(s.edges);
        return out;
      };
      EXPECT_EQ(fast.size(), naive.size()) << "n=" << n << " f=" << f;
      EXPECT_EQ(as_set(fast), as_set(naive));
      EXPECT_EQ(as_set(fast).size(), fast.size()) << "duplicates";
      EXPECT_EQ(count_fault_sets(k, f, 1'000'000), fast.size());
      for (const auto& s : fast) EXPECT_LE(max_fault_degree(s.edges, n), f);
    }
  }
}

TEST(EnumerateFaultSets, KnownMatchingCounts) {
  // Matchings of K_n: 1, 1, 2, 4, 10, 26, 76, 232, 764.
  const std::uint64_t expected[] = {1, 1, 2, 4, 10, 26, 76, 232, 764};
  for (std::size_t n = 1; n <= 8; ++n) {
    const WeightedGraph k = complete_graph(uniform_metric(n));
    EXPECT_EQ(for_each_matching(k, [](std::span<const EdgeId>) { return true; }), expected[n]);
  }
}

TEST(EnumerateFaultSets, VisitorCanStopEarly) {
  const WeightedGraph k = complete_graph(uniform_metric(6));
  int seen = 0;
  for_each_fault_set(k, 2, [&](std::span<const EdgeId>) { return ++seen < 5; });
  EXPECT_EQ(seen, 5);
}

TEST(CountFaultSets, StopsAtCap) {
  const WeightedGraph k = complete_graph(uniform_metric(8));
  EXPECT_EQ(count_fault_sets(k, 1, 100), 101u);
}

TEST(SampleFaultSet, Examples) {
  const WeightedGraph k6 = complete_graph(uniform_metric(6));
  EXPECT_TRUE(sample_fault_set(k6, 0, 9).edges.empty());
  EXPECT_EQ(sample_fault_set(k6, 2, 77), sample_fault_set(k6, 2, 77));
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const FaultSet s = sample_fault_set(k6, 1, seed);
    ASSERT_EQ(s.edges.size(), 3u);
    ASSERT_EQ(max_fault_degree(s.edges, 6), 1);
  }
}

TEST(SampleFaultSet, MaximalForBudget) {
  const Metric m = random_explicit_metric(9, 1);
  const WeightedGraph g = fortify(m, greedy_spanner(m, 1.5), 2);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const FaultSet s = sample_fault_set(g, 2, seed);
    std::vector<int> degree(9, 0);
    for (const EdgeKey& e : s.edges) {
      ++degree[e.u];
      ++degree[e.v];
    }
    for (const Edge& e : g.edges()) {
      if (std::binary_search(s.edges.begin(), s.edges.end(), e.key())) continue;
      EXPECT_TRUE(degree[e.u] >= 2 || degree[e.v] >= 2) << "edge could still be added";
    }
  }
}

TEST(AdversarialFaultSet, FindsMatchingLowerBound) {
  for (const Rational eps : {Rational(1, 10), Rational(1, 4), Rational(1, 2)}) {
    const MatchingLBInstance inst = matching_lb_instance(eps);
    const FaultSet adv = adversarial_fault_set(inst.fortified, 1, inst.metric);
    EXPECT_LE(max_fault_degree(adv.edges, 4), 1);
    EXPECT_NEAR(stretch(inst.fortified, adv, inst.metric).max_ratio, 3.0 - to_double(eps), 1e-12);
  }
}

TEST(AdversarialFaultSet, FZeroIsEmpty) {
  const Metric m = random_explicit_metric(7, 3);
  const WeightedGraph g = greedy_spanner(m, 2.0);
  EXPECT_TRUE(adversarial_fault_set(g, 0, m).edges.empty());
}

TEST(AdversarialFaultSet, NeverBeatsExhaustiveMaximum) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Metric m = random_explicit_metric(8, seed);
    const WeightedGraph g = fortify(m, greedy_spanner(m, 1.5), 1);
    FaultEnumeration exhaustive;
    exhaustive.mode = EnumerationMode::kMatchings;
    const double best = verify_faulty_degree_spanner(g, m, 1, 4.5, exhaustive).observed.max_ratio;
    const FaultSet adv = adversarial_fault_set(g, 1, m);
    EXPECT_LE(stretch(g, adv, m).max_ratio, best);
  }
}

TEST(ParseEnumeration, Modes) {
  EXPECT_EQ(parse_enumeration("exhaustive").mode, EnumerationMode::kExhaustive);
  EXPECT_EQ(parse_enumeration("matchings").mode, EnumerationMode::kMatchings);
  EXPECT_EQ(parse_enumeration("adversarial").mode, EnumerationMode::kAdversarial);
  const FaultEnumeration s = parse_enumeration("sample:250");
  EXPECT_EQ(s.mode, EnumerationMode::kSampled);
  EXPECT_EQ(s.budget, 250u);
  EXPECT_THROW(parse_enumeration("sample:"), Error);
  EXPECT_THROW(parse_enumeration("sample:0"), Error);
  EXPECT_THROW(parse_enumeration("sample:5x"), Error);
  EXPECT_THROW(parse_enumeration("everything"), Error);
}

TEST(Verify, FortifiedGreedyPassesThreeT) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Metric m = euclidean_metric(testing::random_planar(8, seed));
    const WeightedGraph g = fortify(m, greedy_spanner(m, 1.5), 1);
    FaultEnumeration e;
    e.mode = EnumerationMode::kMatchings;
    const VerificationReport r = verify_faulty_degree_spanner(g, m, 1, 4.5, e);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.coverage, Coverage::kExhaustive);
    EXPECT_EQ(r.coverage_count, count_fault_sets(g, 1, 1u << 30));
  }
}

TEST(Verify, WspdSpannerEightPoints) {
  const EuclideanPoints pts = testing::random_planar(8, 88);
  FaultEnumeration e;
  e.mode = EnumerationMode::kMatchings;
  EXPECT_TRUE(
      verify_faulty_degree_spanner(wspd_spanner(pts, 1, 0.5), euclidean_metric(pts), 1, 1.5, e)
          .pass);
}

TEST(Verify, CompleteGraphHasRatioOne) {
  const Metric m = random_explicit_metric(7, 12);
  const VerificationReport r = verify_faulty_degree_spanner(complete_graph(m), m, 3, 1.0);
  EXPECT_DOUBLE_EQ(r.observed.max_ratio, 1.0);
  EXPECT_TRUE(r.pass);
}

TEST(Verify, VerdictUsesRelativeSlack) {
  const MatchingLBInstance inst = matching_lb_instance(Rational(1, 2));
  FaultEnumeration e;
  e.mode = EnumerationMode::kMatchings;
  EXPECT_TRUE(verify_faulty_degree_spanner(inst.fortified, inst.metric, 1, 2.5, e).pass);
  EXPECT_FALSE(verify_faulty_degree_spanner(inst.fortified, inst.metric, 1, 2.5 - 1e-6, e).pass);
  EXPECT_TRUE(within_claim(2.5 * (1 + 5e-10), 2.5));
  EXPECT_FALSE(within_claim(2.5 * (1 + 2e-9), 2.5));
}

TEST(Verify, WitnessAttainsMaximum) {
  const Metric m = random_closure_metric(8, 5);
  const WeightedGraph g = fortify(m, greedy_spanner(m, 2.0), 1);
  FaultEnumeration e;
  e.mode = EnumerationMode::kMatchings;
  const VerificationReport r = verify_faulty_degree_spanner(g, m, 1, 6.0, e);
  const FaultStretch again = reference::stretch(g, r.observed.witness_fault, m);
  EXPECT_NEAR(again.max_ratio, r.observed.max_ratio, 1e-12);
}

TEST(Verify, AgreesWithReferenceHarness) {
  std::size_t compared = 0;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Metric m = random_explicit_metric(7, seed);
    const WeightedGraph base = greedy_spanner(m, 1.5);
    for (const WeightedGraph& g : {base, fortify(m, base, 1)}) {
      if (g.edge_count() > 24) continue;
      const VerificationReport fast = verify_faulty_degree_spanner(g, m, 2, 27.0);
      const VerificationReport slow =
          reference::verify(g, m, 27.0, reference::fault_sets_by_power_set(g, 2));
      if (std::isinf(slow.observed.max_ratio)) {
        EXPECT_TRUE(std::isinf(fast.observed.max_ratio));
        EXPECT_TRUE(fast.observed.unreachable);
      } else {
        EXPECT_NEAR(fast.observed.max_ratio, slow.observed.max_ratio, 1e-12);
      }
      EXPECT_EQ(fast.observed.faults_checked, slow.observed.faults_checked);
      EXPECT_EQ(fast.pass, slow.pass);
      ++compared;
    }
  }
  EXPECT_GE(compared, 6u);
}

TEST(Verify, SizeGuardFallsBackToSampling) {
  const Metric m = random_explicit_metric(12, 2);
  const WeightedGraph g = complete_graph(m);
  FaultEnumeration e;
  e.max_exhaustive = 1000;
  e.budget = 50;
  e.rounds = 2;
  const VerificationReport r = verify_faulty_degree_spanner(g, m, 2, 1.0, e);
  EXPECT_EQ(r.coverage, Coverage::kSampled);
  EXPECT_NE(r.mode.find("sampled"), std::string::npos);
}

TEST(Verify, MonotoneUnderAddingEdges) {
  const Metric m = random_explicit_metric(8, 31);
  const WeightedGraph base = greedy_spanner(m, 1.5);
  const WeightedGraph more = fortify(m, base, 1);
  // Same fault sets for both graphs: those of the sparser one.
  std::size_t worse = 0;
  for (const FaultSet& fault : enumerate_matchings(base)) {
    worse += stretch(more, fault, m).max_ratio > stretch(base, fault, m).max_ratio ? 1 : 0;
  }
  EXPECT_EQ(worse, 0u);
}

}  // namespace
}  // namespace ftspan
