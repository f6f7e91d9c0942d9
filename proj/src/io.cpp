#include "ftspan/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ftspan/error.hpp"

namespace ftspan::io {
namespace {

template <class F>
auto parsing(std::string_view what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::kParse, std::string(what) + ": " + e.what());
  }
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

json ratio_to_json(double r) {
  if (std::isinf(r)) return "Infinity";
  return r;
}

double ratio_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Infinity") return std::numeric_limits<double>::infinity();
    throw Error(ErrorCode::kParse, "unexpected ratio string");
  }
  return j.get<double>();
}

Coverage coverage_from_string(const std::string& s) {
  if (s == "exhaustive") return Coverage::kExhaustive;
  if (s == "sampled") return Coverage::kSampled;
  throw Error(ErrorCode::kParse, "unknown coverage '" + s + "'");
}

}  // namespace

json points_to_json(const EuclideanPoints& pts) {
  json rows = json::array();
  for (PointId p = 0; p < pts.size(); ++p) {
    const auto x = pts[p];
    rows.push_back(std::vector<double>(x.begin(), x.end()));
  }
  return {{"dim", pts.dim()}, {"points", rows}};
}

EuclideanPoints points_from_json(const json& j) {
  return parsing("point set", [&] {
    const auto dim = j.at("dim").get<std::size_t>();
    const auto rows = j.at("points").get<std::vector<std::vector<double>>>();
    for (const auto& row : rows) {
      if (row.size() != dim) {
        throw Error(ErrorCode::kDimensionMismatch, "point row does not have dim coordinates");
      }
    }
    std::vector<double> flat;
    for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
    return EuclideanPoints(dim, std::move(flat));
  });
}

std::string points_to_csv(const EuclideanPoints& pts) {
  std::string out;
  for (PointId p = 0; p < pts.size(); ++p) {
    const auto x = pts[p];
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (k > 0) out += ',';
      out += format_double(x[k]);
    }
    out += '\n';
  }
  return out;
}

EuclideanPoints points_from_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    std::vector<double> row;
    while (true) {
      const auto comma = line.find(',');
      std::string_view cell = line.substr(0, comma);
      while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) cell.remove_prefix(1);
      while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t')) cell.remove_suffix(1);
      double value = 0.0;
      const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size()) {
        throw Error(ErrorCode::kParse, "bad number on CSV line " + std::to_string(line_no));
      }
      row.push_back(value);
      if (comma == std::string_view::npos) break;
      line = line.substr(comma + 1);
    }
    rows.push_back(std::move(row));
  }
  return EuclideanPoints::from_rows(rows);
}

json matrix_to_json(const Metric& m) {
  json rows = json::array();
  for (PointId p = 0; p < m.size(); ++p) {
    const auto row = m.matrix().row(p);
    rows.push_back(std::vector<double>(row.begin(), row.end()));
  }
  return rows;
}

Metric metric_from_json(const json& j) {
  return parsing("metric", [&] {
    if (j.is_array()) return explicit_from_matrix(j.get<std::vector<std::vector<double>>>());
    if (j.is_object() && j.contains("points")) return euclidean_metric(points_from_json(j));
    if (j.is_object() && j.contains("edges")) return graph_closure_metric(graph_from_json(j));
    throw Error(ErrorCode::kParse, "expected a matrix, a point set or an edge list");
  });
}

json graph_to_json(const WeightedGraph& g) {
  json edges = json::array();
  const WeightedGraph sorted = g.canonical();
  for (const Edge& e : sorted.edges()) edges.push_back({e.u, e.v, e.w});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

WeightedGraph graph_from_json(const json& j) {
  return parsing("graph", [&] {
    WeightedGraph g(j.at("n").get<std::size_t>());
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw Error(ErrorCode::kParse, "edge must be [u, v, w]");
      if (!g.add_edge(e[0].get<PointId>(), e[1].get<PointId>(), e[2].get<double>())) {
        throw Error(ErrorCode::kParse, "duplicate edge in graph");
      }
    }
    return g;
  });
}

json fault_set_to_json(const FaultSet& fault) {
  json edges = json::array();
  for (const EdgeKey& e : fault.edges) edges.push_back({e.u, e.v});
  return {{"f", fault.f}, {"edges", edges}};
}

FaultSet fault_set_from_json(const json& j) {
  return parsing("fault set", [&] {
    FaultSet out{j.at("f").get<int>(), {}};
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw Error(ErrorCode::kParse, "fault edge must be [u, v]");
      }
      out.edges.push_back(EdgeKey::of(e[0].get<PointId>(), e[1].get<PointId>()));
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
  });
}

json wspd_to_json(const WSPD& w) {
  json pairs = json::array();
  for (const WSPair& p : w.pairs) pairs.push_back({{"A", p.a}, {"B", p.b}});
  return {{"c", w.c}, {"pairs", pairs}};
}

WSPD wspd_from_json(const json& j) {
  return parsing("wspd", [&] {
    WSPD w;
    w.c = j.at("c").get<double>();
    for (const auto& p : j.at("pairs")) {
      WSPair pair{p.at("A").get<std::vector<PointId>>(), p.at("B").get<std::vector<PointId>>()};
      std::sort(pair.a.begin(), pair.a.end());
      std::sort(pair.b.begin(), pair.b.end());
      w.pairs.push_back(std::move(pair));
    }
    return w;
  });
}

json stretch_report_to_json(const StretchReport& r) {
  return {{"max_ratio", ratio_to_json(r.max_ratio)},
          {"witness_pair", {r.witness_p, r.witness_q}},
          {"witness_fault", fault_set_to_json(r.witness_fault)},
          {"pairs_checked", r.pairs_checked},
          {"faults_checked", r.faults_checked},
          {"mode", std::string(to_string(r.mode))},
          {"unreachable", r.unreachable}};
}

StretchReport stretch_report_from_json(const json& j) {
  return parsing("stretch report", [&] {
    StretchReport r;
    r.max_ratio = ratio_from_json(j.at("max_ratio"));
    r.witness_p = j.at("witness_pair").at(0).get<PointId>();
    r.witness_q = j.at("witness_pair").at(1).get<PointId>();
    r.witness_fault = fault_set_from_json(j.at("witness_fault"));
    r.pairs_checked = j.at("pairs_checked").get<std::size_t>();
    r.faults_checked = j.at("faults_checked").get<std::size_t>();
    r.mode = coverage_from_string(j.at("mode").get<std::string>());
    r.unreachable = j.value("unreachable", false);
    return r;
  });
}

json verification_report_to_json(const VerificationReport& r) {
  const std::string coverage = r.coverage == Coverage::kExhaustive
                                   ? "exact"
                                   : "sampled(" + std::to_string(r.coverage_count) + ")";
  return {{"claimed_t", r.claimed_t},
          {"observed_max", stretch_report_to_json(r.observed)},
          {"verdict", r.pass ? "pass" : "fail"},
          {"coverage", coverage},
          {"mode", r.mode}};
}

VerificationReport verification_report_from_json(const json& j) {
  return parsing("verification report", [&] {
    VerificationReport r;
    r.claimed_t = j.at("claimed_t").get<double>();
    r.observed = stretch_report_from_json(j.at("observed_max"));
    const auto verdict = j.at("verdict").get<std::string>();
    if (verdict != "pass" && verdict != "fail") throw Error(ErrorCode::kParse, "bad verdict");
    r.pass = verdict == "pass";
    const auto coverage = j.at("coverage").get<std::string>();
    if (coverage == "exact") {
      r.coverage = Coverage::kExhaustive;
      r.coverage_count = r.observed.faults_checked;
    } else if (coverage.rfind("sampled(", 0) == 0 && coverage.back() == ')') {
      r.coverage = Coverage::kSampled;
      r.coverage_count = std::stoull(coverage.substr(8, coverage.size() - 9));
    } else {
      throw Error(ErrorCode::kParse, "bad coverage '" + coverage + "'");
    }
    r.mode = j.value("mode", "");
    return r;
  });
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kBadParams, "cannot write " + path.string());
  out << content;
}

json read_json(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  return parsing(path.string(), [&] { return json::parse(text); });
}

Metric load_metric(const std::filesystem::path& path) {
  if (path.extension() == ".csv") return euclidean_metric(points_from_csv(read_file(path)));
  return metric_from_json(read_json(path));
}

EuclideanPoints load_points(const std::filesystem::path& path) {
  if (path.extension() == ".csv") return points_from_csv(read_file(path));
  return points_from_json(read_json(path));
}

WeightedGraph load_graph(const std::filesystem::path& path) {
  return graph_from_json(read_json(path));
}

}  // namespace ftspan::io
