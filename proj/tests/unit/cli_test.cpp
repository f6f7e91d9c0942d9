#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "ftspan/cli.hpp"
#include "ftspan/error.hpp"
#include "ftspan/io.hpp"
#include "ftspan/yao_theta.hpp"

namespace ftspan {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "ftspan");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "ftspan_cli_test";
  fs::create_directories(dir);
  return dir;
}

TEST(CliGen, DeterministicUniform) {
  const CliRun a = run({"gen", "--kind", "uniform", "--n", "10", "--seed", "7"});
  const CliRun b = run({"gen", "--kind", "uniform", "--n", "10", "--seed", "7"});
  ASSERT_EQ(a.code, cli::kExitPass) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(io::points_from_json(io::json::parse(a.out)).size(), 10u);
  EXPECT_TRUE(a.err.find("gen:") != std::string::npos);
}

TEST(CliGen, GridAndCsv) {
  const CliRun r = run({"gen", "--kind", "grid", "--n", "16", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  const EuclideanPoints pts = io::points_from_csv(r.out);
  ASSERT_EQ(pts.size(), 16u);
  EXPECT_EQ(pts[15][0], 3.0);
  EXPECT_EQ(pts[15][1], 3.0);
}

TEST(CliGen, MetricKindsAndErrors) {
  const CliRun r = run({"gen", "--kind", "explicit", "--n", "5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(io::metric_from_json(io::json::parse(r.out)).size(), 5u);
  EXPECT_EQ(run({"gen", "--kind", "explicit", "--n", "5", "--format", "csv"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"gen", "--kind", "spiral", "--n", "5"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"gen", "--kind", "uniform", "--n", "0"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"gen"}).code, cli::kExitUsage);
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitPass);
}

TEST(CliBuildVerify, EveryMethodRoundTrips) {
  const fs::path dir = temp_dir();
  const std::string pts = (dir / "pts.json").string();
  ASSERT_EQ(run({"gen", "--n", "8", "--seed", "3", "--out", pts}).code, 0);
  struct Case {
    std::vector<std::string> build;
    std::string f;
    std::string t;
  };
  const std::vector<Case> cases{
      {{"--method", "greedy", "--t", "1.5"}, "0", "1.5"},
      {{"--method", "fortify", "--f", "1", "--t", "1.5"}, "1", "4.5"},
      {{"--method", "wspd", "--f", "1", "--eps", "0.5"}, "1", "1.5"},
      {{"--method", "yao", "--f", "1", "--eps", "0.2"}, "1", "1.2000000001"},
      {{"--method", "theta", "--f", "0", "--theta", "0.3"}, "0",
       std::to_string(cone_stretch_bound(0.3) + 1e-9)},
  };
  for (const Case& c : cases) {
    const std::string graph = (dir / ("g_" + c.build[1] + ".json")).string();
    std::vector<std::string> args{"build", "--input", pts, "--out", graph};
    args.insert(args.end(), c.build.begin(), c.build.end());
    const CliRun b = run(args);
    ASSERT_EQ(b.code, 0) << b.err;
    const io::json j = io::read_json(graph);
    EXPECT_EQ(j["method"], c.build[1]);
    EXPECT_TRUE(j.contains("claimed_stretch"));
    EXPECT_LE(j["edges"].size(), j["edge_bound"].get<std::size_t>());
    const CliRun v = run({"verify", "--graph", graph, "--metric", pts, "--f", c.f, "--t", c.t,
                       "--mode", "exhaustive"});
    EXPECT_EQ(v.code, cli::kExitPass) << c.build[1] << ": " << v.out << v.err;
    const VerificationReport r = io::verification_report_from_json(io::json::parse(v.out));
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.coverage, Coverage::kExhaustive);
  }
}

TEST(CliVerify, FailureExitCodeAndSampling) {
  const fs::path dir = temp_dir();
  const std::string pts = (dir / "v_pts.json").string();
  const std::string graph = (dir / "v_graph.json").string();
  ASSERT_EQ(run({"gen", "--n", "9", "--seed", "11", "--out", pts}).code, 0);
  ASSERT_EQ(run({"build", "--method", "greedy", "--t", "2", "--input", pts, "--out", graph}).code,
            0);
  const CliRun fail = run({"verify", "--graph", graph, "--metric", pts, "--f", "1", "--t", "2",
                        "--mode", "matchings"});
  EXPECT_EQ(fail.code, cli::kExitFail);
  EXPECT_EQ(io::json::parse(fail.out)["verdict"], "fail");
  const CliRun sampled = run({"verify", "--graph", graph, "--metric", pts, "--f", "1", "--t", "2",
                           "--mode", "sample:20", "--format", "csv"});
  EXPECT_NE(sampled.out.find("sampled(20)"), std::string::npos);
  EXPECT_EQ(run({"verify", "--graph", graph, "--metric", pts, "--f", "1", "--t", "0.5"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--graph", graph, "--metric", pts, "--f", "1", "--t", "2", "--mode",
                 "sample:x"})
                .code,
            cli::kExitUsage);
}

TEST(CliBuild, ConflictingFlagsAreUsageErrors) {
  const fs::path dir = temp_dir();
  const std::string pts = (dir / "c_pts.json").string();
  ASSERT_EQ(run({"gen", "--n", "6", "--out", pts}).code, 0);
  auto code = [&](std::vector<std::string> extra) {
    std::vector<std::string> args{"build", "--input", pts};
    args.insert(args.end(), extra.begin(), extra.end());
    return run(args).code;
  };
  EXPECT_EQ(code({"--method", "yao", "--eps", "0.2", "--theta", "0.1"}), cli::kExitUsage);
  EXPECT_EQ(code({"--method", "yao"}), cli::kExitUsage);
  EXPECT_EQ(code({"--method", "theta", "--theta", "0.8"}), cli::kExitUsage);
  EXPECT_EQ(code({"--method", "wspd", "--eps", "0"}), cli::kExitUsage);
  EXPECT_EQ(code({"--method", "wspd", "--eps", "0.5", "--t", "2"}), cli::kExitUsage);
  EXPECT_EQ(code({"--method", "fortify", "--t", "0.9"}), cli::kExitUsage);
  EXPECT_EQ(code({"--method", "fortify", "--t", "2", "--f", "-1"}), cli::kExitUsage);
  EXPECT_EQ(code({"--method", "fortify", "--t", "2", "--f", "3"}), cli::kExitUsage);
  EXPECT_EQ(code({"--method", "fortify", "--t", "2", "--base", "wspd"}), cli::kExitUsage);
  EXPECT_EQ(code({"--method", "greedy", "--t", "2", "--f", "1"}), cli::kExitUsage);
  EXPECT_EQ(code({"--method", "magic", "--t", "2"}), cli::kExitUsage);
}

TEST(CliBuild, ConeMethodsNeedPoints) {
  const fs::path dir = temp_dir();
  const std::string m = (dir / "matrix.json").string();
  ASSERT_EQ(run({"gen", "--kind", "explicit", "--n", "6", "--out", m}).code, 0);
  EXPECT_EQ(run({"build", "--input", m, "--method", "yao", "--eps", "0.5"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"build", "--input", m, "--method", "fortify", "--t", "2"}).code, cli::kExitPass);
}

TEST(CliLowerbound, ExactReports) {
  const CliRun m = run({"lowerbound", "--which", "matching", "--eps", "1/10"});
  ASSERT_EQ(m.code, 0) << m.err;
  const io::json jm = io::json::parse(m.out);
  EXPECT_EQ(jm["ratio"], "29/10");
  EXPECT_EQ(jm["eps_prime"], "1/38");
  EXPECT_EQ(jm["fortified"].size(), 5u);

  const CliRun g = run({"lowerbound", "--which", "general", "--f", "4", "--eps", "1/50"});
  ASSERT_EQ(g.code, 0) << g.err;
  const io::json jg = io::json::parse(g.out);
  EXPECT_EQ(jg["spanner_dist"], "8");
  EXPECT_EQ(jg["verdict"], "pass");
  for (const auto& obs : jg["observations"]) EXPECT_TRUE(obs["ok"].get<bool>());

  EXPECT_EQ(run({"lowerbound", "--which", "general", "--f", "2", "--eps", "1/50"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"lowerbound", "--which", "matching", "--eps", "0.1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"lowerbound", "--which", "other", "--eps", "1/2"}).code, cli::kExitUsage);
}

TEST(CliBench, SixRowsWithinBounds) {
  cli::BenchConfig config;
  config.methods = {"fortify", "wspd", "theta"};
  config.ns = {50};
  config.fs = {1, 2};
  config.mode = "sample:20";
  const auto rows = cli::cmd_bench(config);
  ASSERT_EQ(rows.size(), 6u);
  for (const auto& r : rows) {
    EXPECT_LE(r.edge_count, r.edge_bound) << r.method;
    EXPECT_TRUE(r.pass) << r.method << " " << r.verified_max_stretch;
    EXPECT_EQ(r.coverage, "sampled(20)");
  }
  EXPECT_TRUE(std::is_sorted(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::tie(a.method, a.n, a.f) < std::tie(b.method, b.n, b.f);
  }));
}

TEST(CliBench, ByteIdenticalAndParseable) {
  const std::vector<std::string> args{"bench", "--methods", "theta,fortify", "--n", "20",
                                      "--f",   "1",         "--mode",        "sample:10",
                                      "--format", "csv"};
  const CliRun a = run(args);
  const CliRun b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto rows = cli::bench_from_csv(a.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(cli::bench_to_csv(rows), a.out);
  EXPECT_EQ(rows[0].method, "fortify");
  EXPECT_EQ(rows[0].build_ms, 0.0);
}

TEST(CliBench, EmptyMethodListIsRejected) {
  cli::BenchConfig config;
  EXPECT_THROW(cli::cmd_bench(config), Error);
  EXPECT_EQ(run({"bench", "--methods", "", "--n", "10"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"bench", "--methods", "bogus"}).code, cli::kExitUsage);
}

}  // namespace
}  // namespace ftspan
