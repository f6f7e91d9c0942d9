#include "ftspan/lowerbounds.hpp"

#include <algorithm>
#include <optional>

#include "ftspan/error.hpp"
#include "ftspan/shortest_paths.hpp"
#include "ftspan/spanner_general.hpp"

namespace ftspan {
namespace {

using Adjacency = std::vector<std::vector<std::pair<PointId, Rational>>>;

Adjacency exact_adjacency(const DistanceMatrix<Rational>& d, const std::vector<EdgeKey>& edges,
                          const std::vector<EdgeKey>& removed) {
  Adjacency adj(d.size());
  for (const EdgeKey& e : edges) {
    if (std::find(removed.begin(), removed.end(), e) != removed.end()) continue;
    adj[e.u].push_back({e.v, d(e.u, e.v)});
    adj[e.v].push_back({e.u, d(e.u, e.v)});
  }
  return adj;
}

std::vector<EdgeKey> all_pairs(std::size_t n) {
  std::vector<EdgeKey> out;
  for (PointId p = 0; p < n; ++p) {
    for (PointId q = p + 1; q < n; ++q) out.push_back({p, q});
  }
  return out;
}

Metric double_metric(const DistanceMatrix<Rational>& exact) {
  DistanceMatrix<double> table(exact.size());
  for (PointId p = 0; p < exact.size(); ++p) {
    for (PointId q = 0; q < exact.size(); ++q) table(p, q) = to_double(exact(p, q));
  }
  return explicit_from_matrix(std::move(table));
}

}  // namespace

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const long long value = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Rational(value);
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    const long long p = std::stoll(num, &used);
    if (used != num.size()) throw std::invalid_argument(text);
    const long long q = std::stoll(den, &used);
    if (used != den.size() || q == 0) throw std::invalid_argument(text);
    return Rational(p, q);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParse, "expected a rational p/q, got '" + text + "'");
  }
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::optional<Rational> exact_distance(const DistanceMatrix<Rational>& d,
                                       const std::vector<EdgeKey>& edges,
                                       const std::vector<EdgeKey>& removed, PointId s, PointId t) {
  return dijkstra(exact_adjacency(d, edges, removed), s)[t];
}

std::optional<Rational> exact_host_distance(const DistanceMatrix<Rational>& d,
                                            const std::vector<EdgeKey>& removed, PointId s,
                                            PointId t) {
  return exact_distance(d, all_pairs(d.size()), removed, s, t);
}

MatchingLBInstance matching_lb_instance(const Rational& eps) {
  if (eps <= Rational(0) || eps >= Rational(1)) {
    throw Error(ErrorCode::kEpsOutOfRange, "matching lower bound needs 0 < eps < 1");
  }
  MatchingLBInstance inst;
  inst.eps = eps;
  inst.eps_prime = eps / (Rational(4) - Rational(2) * eps);
  const Rational e = inst.eps_prime;
  inst.coords = {Rational(0), e, Rational(1) + e, Rational(1) + Rational(2) * e};
  inst.exact = DistanceMatrix<Rational>(4);
  for (PointId i = 0; i < 4; ++i) {
    for (PointId j = 0; j < 4; ++j) inst.exact(i, j) = abs(inst.coords[i] - inst.coords[j]);
  }
  inst.metric = double_metric(inst.exact);

  const std::vector<EdgeKey> path{{0, 1}, {1, 2}, {2, 3}};
  inst.g_prime = metric_graph(inst.metric, path);
  inst.fortified_edges = fortify_edges(inst.exact, path, 1);
  inst.fortified = metric_graph(inst.metric, inst.fortified_edges);
  inst.fault = FaultSet{1, {{0, 1}, {2, 3}}};

  inst.spanner_dist =
      exact_distance(inst.exact, inst.fortified_edges, inst.fault.edges, 0, 3).value();
  inst.host_dist = exact_host_distance(inst.exact, inst.fault.edges, 0, 3).value();
  inst.ratio = inst.spanner_dist / inst.host_dist;
  inst.expected_ratio = Rational(3) - eps;
  return inst;
}

GeneralLBInstance general_lb_instance(int f, const Rational& eps) {
  if (f < 3) throw Error(ErrorCode::kFOutOfRange, "general lower bound needs f >= 3");
  if (eps <= Rational(0) || eps >= Rational(1, f - 2)) {
    throw Error(ErrorCode::kEpsOutOfRange, "general lower bound needs 0 < eps < 1/(f-2)");
  }
  GeneralLBInstance inst;
  inst.f = f;
  inst.eps = eps;
  PointId next = 0;
  inst.clusters.resize(static_cast<std::size_t>(f) + 1);
  for (int j = 0; j <= f; ++j) inst.clusters[0].push_back(next++);
  for (int i = 1; i <= f; ++i) {
    for (int j = 0; j < 2 * f; ++j) inst.clusters[i].push_back(next++);
  }
  const std::size_t n = next;

  auto add = [&](PointId u, PointId v, Rational w) {
    inst.host_edges.push_back({EdgeKey::of(u, v), w});
  };
  const Rational one(1);
  add(inst.b(0), inst.b(f), one + eps);
  add(inst.b(0), inst.b(1), one);
  add(inst.b(f - 1), inst.b(f), one);
  for (int j = 1; j <= f - 2; ++j) add(inst.b(j), inst.b(j + 1), eps);
  for (int i = 1; i <= f; ++i) {
    const auto& cluster = inst.clusters[i];
    for (std::size_t x = 0; x < cluster.size(); ++x) {
      for (std::size_t y = x + 1; y < cluster.size(); ++y) add(cluster[x], cluster[y], eps);
    }
    for (PointId x : cluster) {
      add(x, inst.b(i - 1), one);
      add(x, inst.b(i), one);
    }
  }
  std::sort(inst.host_edges.begin(), inst.host_edges.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  // Exact closure by Floyd-Warshall.
  const Rational none(-1);
  DistanceMatrix<Rational> d(n, none);
  for (PointId p = 0; p < n; ++p) d(p, p) = Rational(0);
  for (const auto& [e, w] : inst.host_edges) {
    d(e.u, e.v) = w;
    d(e.v, e.u) = w;
  }
  for (PointId k = 0; k < n; ++k) {
    for (PointId i = 0; i < n; ++i) {
      if (d(i, k) == none) continue;
      for (PointId j = 0; j < n; ++j) {
        if (d(k, j) == none) continue;
        const Rational via = d(i, k) + d(k, j);
        if (d(i, j) == none || via < d(i, j)) d(i, j) = via;
      }
    }
  }
  inst.exact = std::move(d);
  inst.metric = double_metric(inst.exact);

  inst.host = WeightedGraph(n);
  for (const auto& [e, w] : inst.host_edges) {
    inst.host.add_edge(e.u, e.v, to_double(w));
    if (e != EdgeKey::of(inst.b(0), inst.b(f))) inst.g_prime_edges.push_back(e);
  }
  inst.g_prime = metric_graph(inst.metric, inst.g_prime_edges);
  inst.fortified_edges = fortify_edges(inst.exact, inst.g_prime_edges, f);
  inst.fortified = metric_graph(inst.metric, inst.fortified_edges);

  inst.fault.f = f;
  for (const EdgeKey& e : inst.fortified_edges) {
    if (e.u <= inst.b(f) && e.v <= inst.b(f)) inst.fault.edges.push_back(e);
  }

  inst.spanner_dist =
      exact_distance(inst.exact, inst.fortified_edges, inst.fault.edges, inst.b(0), inst.b(f))
          .value();
  inst.host_dist = exact_host_distance(inst.exact, inst.fault.edges, inst.b(0), inst.b(f)).value();
  inst.ratio = inst.spanner_dist / inst.host_dist;
  return inst;
}

ValidationResult check_observations(const GeneralLBInstance& inst) {
  ValidationResult result;
  auto fail = [&](std::vector<PointId> where, std::string detail) {
    result.violations.push_back({ErrorCode::kBadParams, std::move(where), std::move(detail)});
  };
  for (const auto& [e, w] : inst.host_edges) {
    if (inst.exact(e.u, e.v) != w) {
      fail({e.u, e.v}, "obs1: host edge weight differs from the metric distance");
    }
  }
  const std::size_t n = inst.exact.size();
  Adjacency adj(n);
  for (const EdgeKey& e : inst.g_prime_edges) {
    adj[e.u].push_back({e.v, inst.exact(e.u, e.v)});
    adj[e.v].push_back({e.u, inst.exact(e.u, e.v)});
  }
  for (PointId s = 0; s < n; ++s) {
    const auto dist = dijkstra(adj, s);
    for (PointId t = s + 1; t < n; ++t) {
      if (!dist[t] || *dist[t] > Rational(3) * inst.exact(s, t)) {
        fail({s, t}, "obs2: G' exceeds stretch 3");
      }
    }
  }
  const EdgeKey outer = EdgeKey::of(inst.b(0), inst.b(inst.f));
  if (std::find(inst.fortified_edges.begin(), inst.fortified_edges.end(), outer) !=
      inst.fortified_edges.end()) {
    fail({outer.u, outer.v}, "obs3: {b_0, b_f} is a fortified edge");
  }
  std::vector<int> cluster_of(n, 0);
  for (std::size_t i = 0; i < inst.clusters.size(); ++i) {
    for (PointId p : inst.clusters[i]) cluster_of[p] = static_cast<int>(i);
  }
  for (const EdgeKey& e : inst.fortified_edges) {
    const int cu = cluster_of[e.u];
    const int cv = cluster_of[e.v];
    if (cu >= 1 && cv >= 1 && cu != cv) {
      fail({e.u, e.v}, "obs4: fortified edge joins B_" + std::to_string(cu) + " and B_" +
                           std::to_string(cv));
    }
  }
  return result;
}

}  // namespace ftspan
