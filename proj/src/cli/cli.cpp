#include "ftspan/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>

#include "ftspan/error.hpp"
#include "ftspan/generators.hpp"
#include "ftspan/io.hpp"
#include "ftspan/lowerbounds.hpp"
#include "ftspan/spanner_general.hpp"
#include "ftspan/wspd.hpp"
#include "ftspan/yao_theta.hpp"

namespace ftspan::cli {
namespace {

using io::json;

const std::vector<std::string> kMethods{"fortify", "greedy", "theta", "wspd", "yao"};

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "Infinity" : "-Infinity";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view s) {
  if (s == "Infinity") return std::numeric_limits<double>::infinity();
  double x = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParse, "bad number '" + std::string(s) + "'");
  }
  return x;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kBadParams, message);
}

bool is_point_kind(const std::string& kind) {
  return kind == "uniform" || kind == "clustered" || kind == "circle" || kind == "grid";
}

// Claimed stretch and edge bound of detour fortification on a base with m edges.
double fortify_claim(int f, double t) { return f == 1 ? 3.0 * t : (8.0 * f + 2.0) * t; }
std::size_t fortify_edge_bound(int f, std::size_t m) {
  return f == 1 ? 3 * m : (4 * static_cast<std::size_t>(f) - 1) * m;
}

std::size_t complete_edges(std::size_t n) { return n * (n - 1) / 2; }

json rational_edges(const std::vector<EdgeKey>& keys, const DistanceMatrix<Rational>& d) {
  json out = json::array();
  for (const EdgeKey& e : keys) out.push_back({e.u, e.v, to_string(d(e.u, e.v))});
  return out;
}

std::vector<EdgeKey> sorted_keys(const WeightedGraph& g) {
  auto keys = g.edge_keys();
  std::sort(keys.begin(), keys.end());
  return keys;
}

json matching_report(const Rational& eps, bool& pass) {
  const MatchingLBInstance inst = matching_lb_instance(eps);
  pass = inst.ratio == inst.expected_ratio;
  json coords = json::array();
  for (const Rational& x : inst.coords) coords.push_back(to_string(x));
  return {{"which", "matching"},
          {"eps", to_string(inst.eps)},
          {"eps_prime", to_string(inst.eps_prime)},
          {"coords", coords},
          {"g_prime", rational_edges(sorted_keys(inst.g_prime), inst.exact)},
          {"fortified", rational_edges(inst.fortified_edges, inst.exact)},
          {"fault", io::fault_set_to_json(inst.fault)},
          {"spanner_dist", to_string(inst.spanner_dist)},
          {"host_dist", to_string(inst.host_dist)},
          {"ratio", to_string(inst.ratio)},
          {"ratio_value", to_double(inst.ratio)},
          {"expected_ratio", to_string(inst.expected_ratio)},
          {"verdict", pass ? "pass" : "fail"}};
}

json general_report(int f, const Rational& eps, bool& pass) {
  const GeneralLBInstance inst = general_lb_instance(f, eps);
  const ValidationResult obs = check_observations(inst);
  json observations = json::array();
  for (int k = 1; k <= 4; ++k) {
    const std::string tag = "obs" + std::to_string(k);
    json details = json::array();
    for (const Violation& v : obs.violations) {
      if (v.detail.rfind(tag, 0) == 0) details.push_back(v.detail);
    }
    observations.push_back({{"name", tag}, {"ok", details.empty()}, {"violations", details}});
  }
  const bool spanner_ok = inst.spanner_dist == Rational(2 * f);
  const bool ratio_ok = inst.ratio >= Rational(f);
  pass = obs.ok() && spanner_ok && ratio_ok;
  json host = json::array();
  for (const auto& [key, w] : inst.host_edges) host.push_back({key.u, key.v, to_string(w)});
  return {{"which", "general"},
          {"f", f},
          {"eps", to_string(inst.eps)},
          {"n", inst.exact.size()},
          {"clusters", inst.clusters},
          {"host_edges", host},
          {"g_prime", rational_edges(inst.g_prime_edges, inst.exact)},
          {"fortified", rational_edges(inst.fortified_edges, inst.exact)},
          {"fault", io::fault_set_to_json(inst.fault)},
          {"spanner_dist", to_string(inst.spanner_dist)},
          {"host_dist", to_string(inst.host_dist)},
          {"ratio", to_string(inst.ratio)},
          {"ratio_value", to_double(inst.ratio)},
          {"spanner_dist_is_2f", spanner_ok},
          {"ratio_at_least_f", ratio_ok},
          {"observations", observations},
          {"verdict", pass ? "pass" : "fail"}};
}

std::string graph_to_csv(const WeightedGraph& g) {
  std::string out = "u,v,w\n";
  const WeightedGraph sorted = g.canonical();
  for (const Edge& e : sorted.edges()) {
    out += std::to_string(e.u) + ',' + std::to_string(e.v) + ',' + format_double(e.w) + '\n';
  }
  return out;
}

std::string coverage_string(const VerificationReport& r) {
  return r.coverage == Coverage::kExhaustive ? "exact"
                                             : "sampled(" + std::to_string(r.coverage_count) + ")";
}

}  // namespace

std::string cmd_gen(const GenConfig& config, Format format) {
  require(config.n >= 1, "gen needs n >= 1");
  require(config.dim >= 1, "gen needs dim >= 1");
  if (config.kind == "explicit" || config.kind == "closure") {
    require(format == Format::kJson, "metric generators only write JSON");
    const Metric m = config.kind == "explicit" ? random_explicit_metric(config.n, config.seed)
                                               : random_closure_metric(config.n, config.seed);
    return io::matrix_to_json(m).dump() + "\n";
  }
  require(is_point_kind(config.kind), "unknown gen kind '" + config.kind + "'");
  const EuclideanPoints pts =
      generate_points(parse_point_kind(config.kind), config.n, config.dim, config.seed);
  if (format == Format::kCsv) return io::points_to_csv(pts);
  return io::points_to_json(pts).dump() + "\n";
}

void validate(const BuildConfig& c) {
  require(std::find(kMethods.begin(), kMethods.end(), c.method) != kMethods.end(),
          "unknown method '" + c.method + "'");
  if (c.f) require(*c.f >= 0, "f must be >= 0");
  if (c.t) require(*c.t >= 1.0, "t must be >= 1");
  if (c.eps) require(*c.eps > 0.0, "eps must be > 0");
  if (c.theta) {
    require(*c.theta > 0.0 && *c.theta < std::numbers::pi / 4, "theta must lie in (0, pi/4)");
  }
  if (c.method == "greedy" || c.method == "fortify") {
    require(!c.eps && !c.theta, c.method + " takes --t, not --eps or --theta");
    require(c.t.has_value(), c.method + " needs --t");
  }
  if (c.method == "greedy") require(!c.f, "greedy takes no --f");
  if (c.method == "fortify") {
    require(c.base == "greedy", "fortify supports only --base greedy");
    if (c.f) require(*c.f >= 1, "fortify needs f >= 1");
  }
  if (c.method == "wspd") {
    require(!c.t && !c.theta, "wspd takes --eps, not --t or --theta");
    require(c.eps.has_value(), "wspd needs --eps");
  }
  if (c.method == "yao" || c.method == "theta") {
    require(!c.t, c.method + " takes no --t");
    require(c.eps.has_value() != c.theta.has_value(),
            c.method + " needs exactly one of --theta or --eps");
  }
}

BuildResult cmd_build(const BuildConfig& c, const Metric& m) {
  validate(c);
  const int f = c.f.value_or(1);
  BuildResult r;
  r.method = c.method;
  if (c.method == "greedy") {
    r.graph = greedy_spanner(m, *c.t);
    r.claimed_stretch = *c.t;
    r.edge_bound = complete_edges(m.size());
    return r;
  }
  if (c.method == "fortify") {
    const WeightedGraph base = greedy_spanner(m, *c.t);
    r.graph = fortify(m, base, f);
    r.claimed_stretch = fortify_claim(f, *c.t);
    r.edge_bound = fortify_edge_bound(f, base.edge_count());
    return r;
  }
  require(m.points().has_value(), c.method + " needs a Euclidean point set as input");
  const EuclideanPoints& pts = *m.points();
  if (c.method == "wspd") {
    require(pts.size() >= 2, "wspd needs n >= 2");
    const WSPD w = compute_wspd(build_split_tree(pts), separation_for_eps(*c.eps));
    r.graph = wspd_spanner_from_pairs(m, w, f);
    r.claimed_stretch = 1.0 + *c.eps;
    const std::size_t side = 2 * static_cast<std::size_t>(f) + 1;
    r.edge_bound = side * side * w.size();
    return r;
  }
  const double theta = c.theta ? *c.theta : theta_for_eps(*c.eps);
  r.graph = c.method == "yao" ? yao_graph(pts, theta, f) : theta_graph(pts, theta, f);
  r.claimed_stretch = cone_stretch_bound(theta);
  r.edge_bound = cone_edge_bound(theta, f, pts.size());
  return r;
}

std::vector<BenchRow> cmd_bench(const BenchConfig& config) {
  require(!config.methods.empty(), "bench needs at least one method");
  require(!config.ns.empty() && !config.fs.empty(), "bench needs n and f values");
  for (const auto& method : config.methods) {
    require(std::find(kMethods.begin(), kMethods.end(), method) != kMethods.end(),
            "unknown method '" + method + "'");
  }
  require(is_point_kind(config.kind), "bench needs a point kind");
  const FaultEnumeration base_enum = parse_enumeration(config.mode);

  std::vector<BenchRow> rows;
  for (std::size_t n : config.ns) {
    const EuclideanPoints pts =
        generate_points(parse_point_kind(config.kind), n, 2, config.seed + n);
    const Metric m = euclidean_metric(pts);
    for (int f : config.fs) {
      for (const auto& method : config.methods) {
        BuildConfig bc;
        bc.method = method;
        if (method != "greedy") bc.f = f;
        const bool uses_t = method == "fortify" || method == "greedy";
        if (uses_t) {
          bc.t = config.t;
        } else {
          bc.eps = config.eps;
        }
        const auto start = std::chrono::steady_clock::now();
        BuildResult built = cmd_build(bc, m);
        const auto stop = std::chrono::steady_clock::now();

        FaultEnumeration fe = base_enum;
        fe.seed = config.seed;
        const VerificationReport rep =
            verify_faulty_degree_spanner(built.graph, m, f, built.claimed_stretch, fe);

        BenchRow row;
        row.method = method;
        row.n = n;
        row.f = f;
        row.param = uses_t ? config.t : config.eps;
        row.edge_count = built.graph.edge_count();
        row.edge_bound = built.edge_bound.value_or(complete_edges(n));
        row.claimed_stretch = built.claimed_stretch;
        row.verified_max_stretch = rep.observed.max_ratio;
        row.pass = rep.pass;
        row.mode = rep.mode;
        row.coverage = coverage_string(rep);
        if (config.timing) {
          row.build_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        }
        rows.push_back(std::move(row));
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.method, a.n, a.f, a.param) < std::tie(b.method, b.n, b.f, b.param);
  });
  return rows;
}

std::string bench_to_csv(const std::vector<BenchRow>& rows) {
  std::string out =
      "method,n,f,param,edge_count,edge_bound,claimed_stretch,verified_max_stretch,pass,mode,"
      "coverage,build_ms\n";
  for (const BenchRow& r : rows) {
    out += r.method + ',' + std::to_string(r.n) + ',' + std::to_string(r.f) + ',' +
           format_double(r.param) + ',' + std::to_string(r.edge_count) + ',' +
           std::to_string(r.edge_bound) + ',' + format_double(r.claimed_stretch) + ',' +
           format_double(r.verified_max_stretch) + ',' + (r.pass ? "pass" : "fail") + ',' +
           r.mode + ',' + r.coverage + ',' + format_double(r.build_ms) + '\n';
  }
  return out;
}

std::vector<BenchRow> bench_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<BenchRow> rows;
  if (!std::getline(in, line) || line.rfind("method,", 0) != 0) {
    throw Error(ErrorCode::kParse, "missing bench header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 12) throw Error(ErrorCode::kParse, "bench row needs 12 cells");
    try {
      BenchRow r;
      r.method = cells[0];
      r.n = std::stoull(cells[1]);
      r.f = std::stoi(cells[2]);
      r.param = parse_double(cells[3]);
      r.edge_count = std::stoull(cells[4]);
      r.edge_bound = std::stoull(cells[5]);
      r.claimed_stretch = parse_double(cells[6]);
      r.verified_max_stretch = parse_double(cells[7]);
      if (cells[8] != "pass" && cells[8] != "fail") throw Error(ErrorCode::kParse, "bad verdict");
      r.pass = cells[8] == "pass";
      r.mode = cells[9];
      r.coverage = cells[10];
      r.build_ms = parse_double(cells[11]);
      rows.push_back(std::move(r));
    } catch (const std::logic_error& e) {
      throw Error(ErrorCode::kParse, std::string("bad bench row: ") + e.what());
    }
  }
  return rows;
}

std::string bench_to_json(const std::vector<BenchRow>& rows) {
  json out = json::array();
  for (const BenchRow& r : rows) {
    out.push_back({{"method", r.method},
                   {"n", r.n},
                   {"f", r.f},
                   {"param", r.param},
                   {"edge_count", r.edge_count},
                   {"edge_bound", r.edge_bound},
                   {"claimed_stretch", r.claimed_stretch},
                   {"verified_max_stretch", std::isinf(r.verified_max_stretch)
                                                ? json("Infinity")
                                                : json(r.verified_max_stretch)},
                   {"verdict", r.pass ? "pass" : "fail"},
                   {"mode", r.mode},
                   {"coverage", r.coverage},
                   {"build_ms", r.build_ms}});
  }
  return out.dump(2) + "\n";
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build and verify fault-tolerant geometric spanners", "ftspan"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path;
  std::uint64_t seed = kDefaultSeed;
  std::string format_name = "json";
  app.add_option("--out", out_path, "Write data output to this file instead of stdout");
  app.add_option("--seed", seed, "Random seed")->capture_default_str();
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  GenConfig gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a point set or a random metric");
  gen_cmd->add_option("--kind", gen.kind, "uniform|clustered|circle|grid|explicit|closure")
      ->capture_default_str();
  gen_cmd->add_option("--n", gen.n, "Number of points")->required();
  gen_cmd->add_option("--dim", gen.dim, "Dimension")->capture_default_str();

  BuildConfig build;
  std::string build_input;
  auto* build_cmd = app.add_subcommand("build", "Build a spanner");
  build_cmd->add_option("--method", build.method, "fortify|wspd|yao|theta|greedy")->required();
  build_cmd->add_option("--input", build_input, "Metric or point-set file")->required();
  build_cmd->add_option("--f", build.f, "Fault degree");
  build_cmd->add_option("--t", build.t, "Base stretch");
  build_cmd->add_option("--eps", build.eps, "Target stretch 1+eps");
  build_cmd->add_option("--theta", build.theta, "Cone angle in radians");
  build_cmd->add_option("--base", build.base, "Base spanner for fortify")->capture_default_str();

  std::string graph_path;
  std::string metric_path;
  int verify_f = 1;
  double verify_t = 1.0;
  std::string mode = "exhaustive";
  int rounds = 16;
  bool allow_large = false;
  auto* verify_cmd = app.add_subcommand("verify", "Verify a faulty-degree spanner");
  verify_cmd->add_option("--graph", graph_path, "Graph JSON")->required();
  verify_cmd->add_option("--metric", metric_path, "Metric or point-set file")->required();
  verify_cmd->add_option("--f", verify_f, "Fault degree")->required();
  verify_cmd->add_option("--t", verify_t, "Claimed stretch")->required();
  verify_cmd->add_option("--mode", mode, "exhaustive|matchings|sample:<k>|adversarial")
      ->capture_default_str();
  verify_cmd->add_option("--rounds", rounds, "Adversary rounds")->capture_default_str();
  verify_cmd->add_flag("--allow-large", allow_large, "Lift the exhaustive size guard");

  std::string which;
  int lb_f = 3;
  std::string lb_eps;
  auto* lb_cmd =
      app.add_subcommand("lowerbound", "Emit a lower-bound instance with an exact report");
  lb_cmd->add_option("--which", which, "matching|general")
      ->required()
      ->check(CLI::IsMember({"matching", "general"}));
  lb_cmd->add_option("--f", lb_f, "Fault degree for the general instance")->capture_default_str();
  lb_cmd->add_option("--eps", lb_eps, "Rational eps as p/q")->required();

  BenchConfig bench;
  bench.methods.clear();
  auto* bench_cmd = app.add_subcommand("bench", "Build and verify a grid of configurations");
  bench_cmd->add_option("--methods", bench.methods, "Comma-separated methods")
      ->delimiter(',')
      ->required();
  bench_cmd->add_option("--n", bench.ns, "Point counts")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--f", bench.fs, "Fault degrees")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--eps", bench.eps, "eps for wspd, yao and theta")->capture_default_str();
  bench_cmd->add_option("--t", bench.t, "t for greedy and fortify")->capture_default_str();
  bench_cmd->add_option("--kind", bench.kind, "Point distribution")->capture_default_str();
  bench_cmd->add_option("--mode", bench.mode, "Verification mode")->capture_default_str();
  bench_cmd->add_flag("--timing", bench.timing, "Record wall-clock build time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  const Format format = format_name == "csv" ? Format::kCsv : Format::kJson;
  auto emit = [&](const std::string& text) {
    if (out_path.empty()) {
      out << text;
    } else {
      io::write_file(out_path, text);
    }
  };

  try {
    if (*gen_cmd) {
      gen.seed = seed;
      emit(cmd_gen(gen, format));
      err << "gen: wrote " << gen.n << " " << gen.kind << " items\n";
      return kExitPass;
    }
    if (*build_cmd) {
      validate(build);
      const Metric m = io::load_metric(build_input);
      const BuildResult r = cmd_build(build, m);
      if (format == Format::kCsv) {
        emit(graph_to_csv(r.graph));
      } else {
        json j = io::graph_to_json(r.graph);
        j["method"] = r.method;
        j["claimed_stretch"] = r.claimed_stretch;
        if (r.edge_bound) j["edge_bound"] = *r.edge_bound;
        emit(j.dump() + "\n");
      }
      err << "build: " << r.method << " n=" << m.size() << " edges=" << r.graph.edge_count();
      if (r.edge_bound) err << " bound=" << *r.edge_bound;
      err << " claimed_stretch=" << format_double(r.claimed_stretch) << "\n";
      return kExitPass;
    }
    if (*verify_cmd) {
      require(verify_f >= 0, "f must be >= 0");
      require(verify_t >= 1.0, "t must be >= 1");
      require(rounds >= 0, "rounds must be >= 0");
      FaultEnumeration fe = parse_enumeration(mode);
      fe.seed = seed;
      fe.rounds = rounds;
      fe.allow_large = allow_large;
      const WeightedGraph g = io::load_graph(graph_path);
      const Metric m = io::load_metric(metric_path);
      const VerificationReport r = verify_faulty_degree_spanner(g, m, verify_f, verify_t, fe);
      if (format == Format::kCsv) {
        emit("claimed_t,observed_max,verdict,coverage,mode\n" + format_double(r.claimed_t) + ',' +
             format_double(r.observed.max_ratio) + ',' + (r.pass ? "pass" : "fail") + ',' +
             coverage_string(r) + ',' + r.mode + '\n');
      } else {
        emit(io::verification_report_to_json(r).dump(2) + "\n");
      }
      err << "verify: " << (r.pass ? "pass" : "fail") << " observed="
          << format_double(r.observed.max_ratio) << " claimed=" << format_double(r.claimed_t)
          << " coverage=" << coverage_string(r) << "\n";
      return r.pass ? kExitPass : kExitFail;
    }
    if (*lb_cmd) {
      require(format == Format::kJson, "lowerbound only writes JSON");
      const Rational eps = parse_rational(lb_eps);
      bool pass = false;
      const json j =
          which == "matching" ? matching_report(eps, pass) : general_report(lb_f, eps, pass);
      emit(j.dump(2) + "\n");
      err << "lowerbound: " << which << " ratio=" << j["ratio"].get<std::string>() << " "
          << (pass ? "pass" : "fail") << "\n";
      return pass ? kExitPass : kExitFail;
    }
    if (*bench_cmd) {
      bench.seed = seed;
      const auto rows = cmd_bench(bench);
      emit(format == Format::kCsv ? bench_to_csv(rows) : bench_to_json(rows));
      const bool all_pass =
          std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.pass; });
      err << "bench: " << rows.size() << " rows, " << (all_pass ? "all pass" : "failures") << "\n";
      return all_pass ? kExitPass : kExitFail;
    }
  } catch (const Error& e) {
    const std::string code(to_string(e.code()));
    std::string message = e.what();
    if (message.rfind(code + ": ", 0) == 0) message.erase(0, code.size() + 2);
    err << json{{"error", code}, {"message", message}}.dump() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace ftspan::cli
