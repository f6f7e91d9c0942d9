#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ftspan/graph.hpp"
#include "ftspan/metric.hpp"

namespace ftspan {

// Fair split tree over a Euclidean point set. Node 0 is the root; leaves hold
// one point each.
class SplitTree {
 public:
  struct Node {
    std::vector<PointId> points;  // sorted ascending
    std::vector<double> lo;
    std::vector<double> hi;
    int left = -1;
    int right = -1;

    bool is_leaf() const { return left < 0; }
  };

  std::span<const Node> nodes() const { return nodes_; }
  const Node& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  const Node& root() const { return nodes_.front(); }
  std::size_t leaf_count() const;
  std::size_t dim() const { return dim_; }

 private:
  friend SplitTree build_split_tree(const EuclideanPoints& pts);
  std::vector<Node> nodes_;
  std::size_t dim_ = 0;
};

// Recursively halves the bounding box perpendicular to its longest side.
// Throws kDuplicatePoints on repeated points, kBadParams on an empty set.
SplitTree build_split_tree(const EuclideanPoints& pts);

struct WSPair {
  std::vector<PointId> a;  // sorted ascending
  std::vector<PointId> b;  // sorted ascending

  bool operator==(const WSPair&) const = default;
};

struct WSPD {
  double c = 0.0;
  std::vector<WSPair> pairs;

  std::size_t size() const { return pairs.size(); }
};

// Throws kBadParams unless c > 0.
WSPD compute_wspd(const SplitTree& tree, double c);

// Exact separation of every pair and exactly-once coverage of every point pair.
ValidationResult verify_wspd(const WSPD& w, const Metric& m);

// Separation ratio used by the faulty-degree WSPD spanner: 2 + 4/eps.
double separation_for_eps(double eps);

// Complete bipartite graph between the min(2f+1, |A|) and min(2f+1, |B|)
// smallest ids of every pair. f = 0 gives the classic WSPD spanner.
WeightedGraph wspd_spanner_from_pairs(const Metric& m, const WSPD& w, int f);

// Builds the split tree and WSPD with c = 2 + 4/eps, then the spanner above.
// Throws kEpsOutOfRange, kFOutOfRange, kBadParams (n < 2).
WeightedGraph wspd_spanner(const EuclideanPoints& pts, int f, double eps);

}  // namespace ftspan
