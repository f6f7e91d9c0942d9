#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ftspan/faults.hpp"
#include "ftspan/graph.hpp"
#include "ftspan/metric.hpp"

namespace ftspan::cli {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitInternal = 3 };

enum class Format { kJson, kCsv };

struct GenConfig {
  // uniform | clustered | circle | grid, or explicit | closure for random metrics.
  std::string kind = "uniform";
  std::size_t n = 10;
  std::size_t dim = 2;
  std::uint64_t seed = kDefaultSeed;
};

// Serialized generator output. Metric kinds only support JSON.
std::string cmd_gen(const GenConfig& config, Format format);

struct BuildConfig {
  // fortify | wspd | yao | theta | greedy
  std::string method;
  std::optional<int> f;
  std::optional<double> t;
  std::optional<double> eps;
  std::optional<double> theta;
  std::string base = "greedy";
};

struct BuildResult {
  std::string method;
  WeightedGraph graph;
  double claimed_stretch = 1.0;
  // Guaranteed upper bound on the edge count, when the method has one.
  std::optional<std::size_t> edge_bound;
};

// Throws Error(kBadParams) for conflicting or missing flags before any work.
void validate(const BuildConfig& config);
BuildResult cmd_build(const BuildConfig& config, const Metric& m);

struct BenchConfig {
  std::vector<std::string> methods;
  std::vector<std::size_t> ns{50};
  std::vector<int> fs{1, 2};
  double eps = 0.5;
  double t = 2.0;
  std::string kind = "uniform";
  std::string mode = "sample:500";
  std::uint64_t seed = kDefaultSeed;
  // build_ms is 0 unless set, which keeps the table byte-stable.
  bool timing = false;
};

struct BenchRow {
  std::string method;
  std::size_t n = 0;
  int f = 0;
  double param = 0.0;
  std::size_t edge_count = 0;
  std::size_t edge_bound = 0;
  double claimed_stretch = 1.0;
  double verified_max_stretch = 1.0;
  bool pass = false;
  std::string mode;
  std::string coverage;
  double build_ms = 0.0;

  bool operator==(const BenchRow&) const = default;
};

std::vector<BenchRow> cmd_bench(const BenchConfig& config);
std::string bench_to_csv(const std::vector<BenchRow>& rows);
std::vector<BenchRow> bench_from_csv(const std::string& text);
std::string bench_to_json(const std::vector<BenchRow>& rows);

// Full command-line entry point. Data goes to --out or `out`, logs to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ftspan::cli
