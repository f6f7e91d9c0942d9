#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "ftspan/distance_matrix.hpp"
#include "ftspan/graph.hpp"
#include "ftspan/metric.hpp"

namespace ftspan {

using Rational = boost::rational<std::int64_t>;

// Accepts "p/q" or an integer. Throws kParse.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);
inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Four collinear points p, a, b, q at 0, e', 1+e', 1+2e' with e' = eps/(4-2eps),
// the path p-a-b-q as base 1-spanner, its f = 1 fortification and the
// matching {{p,a},{b,q}}. Ids: p=0, a=1, b=2, q=3.
struct MatchingLBInstance {
  Rational eps;
  Rational eps_prime;
  std::vector<Rational> coords;
  DistanceMatrix<Rational> exact;
  Metric metric;
  WeightedGraph g_prime;
  WeightedGraph fortified;
  std::vector<EdgeKey> fortified_edges;
  FaultSet fault;
  // Exact delta_{G\F}(p,q), delta_{K\F}(p,q) and their quotient.
  Rational spanner_dist;
  Rational host_dist;
  Rational ratio;
  Rational expected_ratio;
};

// Throws kEpsOutOfRange unless 0 < eps < 1.
MatchingLBInstance matching_lb_instance(const Rational& eps);

// Clusters B_0 = {b_0..b_f} (ids 0..f) and B_1..B_f of 2f points each (ids
// blockwise after B_0), the host graph H with the five weight rules, its
// shortest-path metric, G' = H minus {b_0,b_f}, the fortification of G' and
// the fault set of all fortified edges inside B_0.
struct GeneralLBInstance {
  int f = 0;
  Rational eps;
  std::vector<std::vector<PointId>> clusters;
  std::vector<std::pair<EdgeKey, Rational>> host_edges;
  DistanceMatrix<Rational> exact;
  Metric metric;
  WeightedGraph host;
  WeightedGraph g_prime;
  WeightedGraph fortified;
  std::vector<EdgeKey> g_prime_edges;
  std::vector<EdgeKey> fortified_edges;
  FaultSet fault;
  Rational spanner_dist;  // delta_{G\F}(b_0, b_f)
  Rational host_dist;     // delta_{K\F}(b_0, b_f)
  Rational ratio;

  PointId b(int i) const { return static_cast<PointId>(i); }
};

// Throws kFOutOfRange unless f >= 3, kEpsOutOfRange unless 0 < eps < 1/(f-2).
GeneralLBInstance general_lb_instance(int f, const Rational& eps);

// Structural facts of the general instance:
//  1. every host edge weight equals the metric distance;
//  2. G' is a 3-spanner of the metric;
//  3. {b_0, b_f} is not a fortified edge;
//  4. no fortified edge joins B_i and B_j for 1 <= i < j <= f.
// Each failed fact is reported as a violation whose detail starts "obs<k>".
ValidationResult check_observations(const GeneralLBInstance& inst);

// Exact shortest path between s and t in the graph on `edges` (weights from
// d) with `removed` deleted; nullopt when disconnected.
std::optional<Rational> exact_distance(const DistanceMatrix<Rational>& d,
                                       const std::vector<EdgeKey>& edges,
                                       const std::vector<EdgeKey>& removed, PointId s, PointId t);

// Exact shortest path in the complete graph on d minus `removed`.
std::optional<Rational> exact_host_distance(const DistanceMatrix<Rational>& d,
                                            const std::vector<EdgeKey>& removed, PointId s,
                                            PointId t);

}  // namespace ftspan
