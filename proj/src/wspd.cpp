#include "ftspan/wspd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "ftspan/error.hpp"
#include "ftspan/shortest_paths.hpp"
#include "ftspan/spanner_general.hpp"

namespace ftspan {
namespace {

void fit_box(const EuclideanPoints& pts, SplitTree::Node& node) {
  const std::size_t dim = pts.dim();
  node.lo.assign(dim, kInfinity);
  node.hi.assign(dim, -kInfinity);
  for (PointId p : node.points) {
    const auto x = pts[p];
    for (std::size_t k = 0; k < dim; ++k) {
      node.lo[k] = std::min(node.lo[k], x[k]);
      node.hi[k] = std::max(node.hi[k], x[k]);
    }
  }
}

double box_diagonal(const SplitTree::Node& node) {
  double sum = 0.0;
  for (std::size_t k = 0; k < node.lo.size(); ++k) {
    const double side = node.hi[k] - node.lo[k];
    sum += side * side;
  }
  return std::sqrt(sum);
}

double box_gap(const SplitTree::Node& a, const SplitTree::Node& b) {
  double sum = 0.0;
  for (std::size_t k = 0; k < a.lo.size(); ++k) {
    double gap = 0.0;
    if (a.hi[k] < b.lo[k]) gap = b.lo[k] - a.hi[k];
    else if (b.hi[k] < a.lo[k]) gap = a.lo[k] - b.hi[k];
    sum += gap * gap;
  }
  return std::sqrt(sum);
}

}  // namespace

std::size_t SplitTree::leaf_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.is_leaf(); }));
}

SplitTree build_split_tree(const EuclideanPoints& pts) {
  const std::size_t n = pts.size();
  if (n == 0) throw Error(ErrorCode::kBadParams, "split tree needs at least one point");
  {
    std::vector<PointId> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto less = [&](PointId a, PointId b) {
      const auto x = pts[a];
      const auto y = pts[b];
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    };
    std::sort(order.begin(), order.end(), less);
    for (std::size_t i = 1; i < n; ++i) {
      if (!less(order[i - 1], order[i])) {
        throw Error(ErrorCode::kDuplicatePoints, "points " + std::to_string(order[i - 1]) +
                                                     " and " + std::to_string(order[i]) +
                                                     " coincide");
      }
    }
  }
  SplitTree tree;
  tree.dim_ = pts.dim();
  tree.nodes_.emplace_back();
  tree.nodes_[0].points.resize(n);
  std::iota(tree.nodes_[0].points.begin(), tree.nodes_[0].points.end(), 0);
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int index = stack.back();
    stack.pop_back();
    fit_box(pts, tree.nodes_[index]);
    if (tree.nodes_[index].points.size() == 1) continue;
    const auto& node = tree.nodes_[index];
    std::size_t axis = 0;
    for (std::size_t k = 1; k < tree.dim_; ++k) {
      if (node.hi[k] - node.lo[k] > node.hi[axis] - node.lo[axis]) axis = k;
    }
    const double mid = 0.5 * (node.lo[axis] + node.hi[axis]);
    SplitTree::Node left;
    SplitTree::Node right;
    for (PointId p : node.points) {
      (pts[p][axis] < mid ? left : right).points.push_back(p);
    }
    // Distinct points give a positive longest side, so both halves are nonempty.
    const int li = static_cast<int>(tree.nodes_.size());
    tree.nodes_.push_back(std::move(left));
    tree.nodes_.push_back(std::move(right));
    tree.nodes_[index].left = li;
    tree.nodes_[index].right = li + 1;
    stack.push_back(li + 1);
    stack.push_back(li);
  }
  return tree;
}

WSPD compute_wspd(const SplitTree& tree, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw Error(ErrorCode::kBadParams, "separation ratio must be positive");
  }
  WSPD out;
  out.c = c;
  // Box gap is a lower bound on |AB| and the box diagonal an upper bound on
  // the diameter, so every emitted pair is well-separated.
  auto separated = [&](const SplitTree::Node& a, const SplitTree::Node& b) {
    return box_gap(a, b) >= c * std::max(box_diagonal(a), box_diagonal(b)) * (1.0 + 1e-12);
  };
  std::vector<std::pair<int, int>> work;
  for (std::size_t i = 0; i < tree.nodes().size(); ++i) {
    const auto& node = tree.nodes()[i];
    if (!node.is_leaf()) work.emplace_back(node.left, node.right);
    while (!work.empty()) {
      auto [u, v] = work.back();
      work.pop_back();
      const auto& a = tree.node(u);
      const auto& b = tree.node(v);
      if (separated(a, b)) {
        out.pairs.push_back({a.points, b.points});
        continue;
      }
      if (box_diagonal(a) >= box_diagonal(b)) {
        work.emplace_back(a.right, v);
        work.emplace_back(a.left, v);
      } else {
        work.emplace_back(u, b.right);
        work.emplace_back(u, b.left);
      }
    }
  }
  for (auto& pair : out.pairs) {
    std::sort(pair.a.begin(), pair.a.end());
    std::sort(pair.b.begin(), pair.b.end());
  }
  return out;
}

ValidationResult verify_wspd(const WSPD& w, const Metric& m) {
  ValidationResult result;
  const auto n = static_cast<PointId>(m.size());
  DistanceMatrix<std::uint32_t> cover(n, 0);
  for (std::size_t i = 0; i < w.pairs.size(); ++i) {
    const WSPair& pair = w.pairs[i];
    if (pair.a.empty() || pair.b.empty()) {
      result.violations.push_back(
          {ErrorCode::kCoverageViolation, {}, "pair " + std::to_string(i) + " has an empty side"});
      continue;
    }
    double gap = kInfinity;
    double diam = 0.0;
    for (PointId p : pair.a) {
      for (PointId q : pair.b) {
        gap = std::min(gap, m.dist(p, q));
        if (p == q) {
          result.violations.push_back({ErrorCode::kCoverageViolation, {p},
                                       "pair " + std::to_string(i) + " sides intersect"});
        } else {
          ++cover(std::min(p, q), std::max(p, q));
        }
      }
    }
    for (const auto* side : {&pair.a, &pair.b}) {
      for (PointId p : *side) {
        for (PointId q : *side) diam = std::max(diam, m.dist(p, q));
      }
    }
    if (gap < w.c * diam) {
      result.violations.push_back(
          {ErrorCode::kSeparationViolation, {pair.a.front(), pair.b.front()},
           "pair " + std::to_string(i) + " has |AB|=" + std::to_string(gap) +
               " < c*diam=" + std::to_string(w.c * diam)});
    }
  }
  for (PointId p = 0; p < n; ++p) {
    for (PointId q = p + 1; q < n; ++q) {
      if (cover(p, q) != 1) {
        result.violations.push_back({ErrorCode::kCoverageViolation, {p, q},
                                     "pair (" + std::to_string(p) + "," +
                                         std::to_string(q) + ") covered " +
                                         std::to_string(cover(p, q)) + " times"});
      }
    }
  }
  return result;
}

double separation_for_eps(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw Error(ErrorCode::kEpsOutOfRange, "eps must be positive");
  }
  return 2.0 + 4.0 / eps;
}

WeightedGraph wspd_spanner_from_pairs(const Metric& m, const WSPD& w, int f) {
  if (f < 0) throw Error(ErrorCode::kFOutOfRange, "f must be >= 0");
  const std::size_t keep = 2 * static_cast<std::size_t>(f) + 1;
  std::vector<EdgeKey> keys;
  for (const WSPair& pair : w.pairs) {
    const std::size_t na = std::min(keep, pair.a.size());
    const std::size_t nb = std::min(keep, pair.b.size());
    for (std::size_t i = 0; i < na; ++i) {
      for (std::size_t j = 0; j < nb; ++j) keys.push_back(EdgeKey::of(pair.a[i], pair.b[j]));
    }
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return metric_graph(m, keys);
}

WeightedGraph wspd_spanner(const EuclideanPoints& pts, int f, double eps) {
  const double c = separation_for_eps(eps);
  if (f < 0) throw Error(ErrorCode::kFOutOfRange, "f must be >= 0");
  if (pts.size() < 2) throw Error(ErrorCode::kBadParams, "wspd spanner needs n >= 2");
  const SplitTree tree = build_split_tree(pts);
  return wspd_spanner_from_pairs(euclidean_metric(pts), compute_wspd(tree, c), f);
}

}  // namespace ftspan
