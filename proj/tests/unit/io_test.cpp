#include <cmath>
#include <filesystem>

#include <gtest/gtest.h>

#include "ftspan/error.hpp"
#include "ftspan/faults.hpp"
#include "ftspan/io.hpp"
#include "ftspan/spanner_general.hpp"
#include "ftspan/wspd.hpp"
#include "test_support.hpp"

namespace ftspan {
namespace {

namespace fs = std::filesystem;

fs::path temp_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "ftspan_io_test";
  fs::create_directories(dir);
  return dir / name;
}

TEST(PointsIo, JsonRoundTrip) {
  const EuclideanPoints pts = generate_points(PointKind::kClustered, 20, 3, 9);
  EXPECT_EQ(io::points_from_json(io::points_to_json(pts)), pts);
  EXPECT_EQ(io::points_from_json(io::json::parse(io::points_to_json(pts).dump())), pts);
}

TEST(PointsIo, CsvRoundTripIsExact) {
  const EuclideanPoints pts = testing::random_planar(30, 4);
  EXPECT_EQ(io::points_from_csv(io::points_to_csv(pts)), pts);
}

TEST(PointsIo, CsvToleratesWhitespaceAndCrLf) {
  const EuclideanPoints pts = io::points_from_csv("0, 1\r\n 2.5,3\n\n");
  EXPECT_EQ(pts, EuclideanPoints(2, {0, 1, 2.5, 3}));
}

TEST(PointsIo, MalformedInput) {
  EXPECT_THROW(io::points_from_csv("1,2\n3,x\n"), Error);
  EXPECT_THROW(io::points_from_csv("1,2\n3\n"), Error);
  EXPECT_THROW(io::points_from_json(io::json::parse(R"({"dim":2,"points":[[1,2],[3]]})")), Error);
  EXPECT_THROW(io::points_from_json(io::json::parse(R"({"points":[[1,2]]})")), Error);
}

TEST(MetricIo, AutoDetectsKind) {
  const Metric matrix = io::metric_from_json(io::json::parse("[[0,2],[2,0]]"));
  EXPECT_EQ(matrix.kind(), MetricKind::kExplicit);
  EXPECT_EQ(matrix.dist(0, 1), 2.0);

  const Metric pts = io::metric_from_json(io::json::parse(R"({"dim":2,"points":[[0,0],[3,4]]})"));
  EXPECT_EQ(pts.kind(), MetricKind::kEuclidean);
  EXPECT_EQ(pts.dist(0, 1), 5.0);

  const Metric closure =
      io::metric_from_json(io::json::parse(R"({"n":3,"edges":[[0,1,1],[1,2,1]]})"));
  EXPECT_EQ(closure.kind(), MetricKind::kGraphClosure);
  EXPECT_EQ(closure.dist(0, 2), 2.0);

  EXPECT_THROW(io::metric_from_json(io::json::parse("42")), Error);
  EXPECT_THROW(io::metric_from_json(io::json::parse("[[0,1],[2,0]]")), Error);
}

TEST(MetricIo, MatrixRoundTrip) {
  const Metric m = random_closure_metric(10, 3);
  EXPECT_EQ(io::metric_from_json(io::matrix_to_json(m)).matrix(), m.matrix());
}

TEST(GraphIo, RoundTrip) {
  const Metric m = random_explicit_metric(9, 2);
  const WeightedGraph g = fortify(m, greedy_spanner(m, 1.5), 2);
  const WeightedGraph back = io::graph_from_json(io::json::parse(io::graph_to_json(g).dump()));
  EXPECT_EQ(back, g);
  for (const Edge& e : back.edges()) EXPECT_EQ(e.w, m.dist(e.u, e.v));
}

TEST(GraphIo, RejectsBadEdges) {
  EXPECT_THROW(io::graph_from_json(io::json::parse(R"({"n":2,"edges":[[0,1]]})")), Error);
  EXPECT_THROW(io::graph_from_json(io::json::parse(R"({"n":2,"edges":[[0,2,1]]})")), Error);
  EXPECT_THROW(io::graph_from_json(io::json::parse(R"({"n":2,"edges":[[0,1,1],[1,0,1]]})")),
               Error);
}

TEST(FaultSetIo, RoundTrip) {
  const FaultSet f = testing::make_faults(2, {{3, 1}, {0, 2}, {0, 1}});
  FaultSet sorted = f;
  std::sort(sorted.edges.begin(), sorted.edges.end());
  EXPECT_EQ(io::fault_set_from_json(io::fault_set_to_json(f)), sorted);
}

TEST(WspdIo, RoundTrip) {
  const EuclideanPoints pts = testing::random_planar(15, 6);
  const WSPD w = compute_wspd(build_split_tree(pts), 10.0);
  const WSPD back = io::wspd_from_json(io::json::parse(io::wspd_to_json(w).dump()));
  EXPECT_EQ(back.c, w.c);
  EXPECT_EQ(back.pairs, w.pairs);
}

TEST(ReportIo, VerificationRoundTrip) {
  const Metric m = random_explicit_metric(7, 1);
  const WeightedGraph g = fortify(m, greedy_spanner(m, 1.5), 1);
  FaultEnumeration e;
  e.mode = EnumerationMode::kMatchings;
  const VerificationReport r = verify_faulty_degree_spanner(g, m, 1, 4.5, e);
  const io::json j = io::verification_report_to_json(r);
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["coverage"], "exact");
  const VerificationReport back = io::verification_report_from_json(io::json::parse(j.dump()));
  EXPECT_EQ(back.pass, r.pass);
  EXPECT_EQ(back.claimed_t, r.claimed_t);
  EXPECT_EQ(back.observed.max_ratio, r.observed.max_ratio);
  EXPECT_EQ(back.observed.witness_fault, r.observed.witness_fault);
  EXPECT_EQ(back.coverage_count, r.coverage_count);
}

TEST(ReportIo, SampledCoverageAndInfinity) {
  VerificationReport r;
  r.claimed_t = 2.0;
  r.observed.max_ratio = INFINITY;
  r.observed.unreachable = true;
  r.coverage = Coverage::kSampled;
  r.coverage_count = 123;
  r.pass = false;
  const io::json j = io::verification_report_to_json(r);
  EXPECT_EQ(j["coverage"], "sampled(123)");
  EXPECT_EQ(j["observed_max"]["max_ratio"], "Infinity");
  const VerificationReport back = io::verification_report_from_json(io::json::parse(j.dump()));
  EXPECT_TRUE(std::isinf(back.observed.max_ratio));
  EXPECT_EQ(back.coverage, Coverage::kSampled);
  EXPECT_EQ(back.coverage_count, 123u);
  EXPECT_FALSE(back.pass);
}

TEST(FileIo, LoadByExtension) {
  const EuclideanPoints pts = testing::random_planar(6, 2);
  const fs::path csv = temp_file("pts.csv");
  const fs::path json = temp_file("pts.json");
  io::write_file(csv, io::points_to_csv(pts));
  io::write_file(json, io::points_to_json(pts).dump());
  EXPECT_EQ(io::load_points(csv), pts);
  EXPECT_EQ(io::load_points(json), pts);
  EXPECT_EQ(io::load_metric(csv).matrix(), euclidean_metric(pts).matrix());
  EXPECT_THROW(io::load_metric(temp_file("missing.json")), Error);
  io::write_file(json, "{not json");
  EXPECT_THROW(io::load_metric(json), Error);
}

}  // namespace
}  // namespace ftspan
