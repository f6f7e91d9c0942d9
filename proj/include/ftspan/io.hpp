#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ftspan/faults.hpp"
#include "ftspan/graph.hpp"
#include "ftspan/metric.hpp"
#include "ftspan/stretch.hpp"
#include "ftspan/wspd.hpp"

namespace ftspan::io {

using nlohmann::json;

// All readers throw Error(kParse) on malformed input.

// {"dim": d, "points": [[...], ...]}
json points_to_json(const EuclideanPoints& pts);
EuclideanPoints points_from_json(const json& j);

// One point per row, dim comma-separated columns, no header.
std::string points_to_csv(const EuclideanPoints& pts);
EuclideanPoints points_from_csv(std::string_view text);

// n x n array of arrays.
json matrix_to_json(const Metric& m);

// Accepts a point set (Euclidean), a matrix (explicit) or an edge list
// (graph closure).
Metric metric_from_json(const json& j);

// {"n": n, "edges": [[u, v, w], ...]} with edges in canonical order.
json graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const json& j);

// {"f": f, "edges": [[u, v], ...]}
json fault_set_to_json(const FaultSet& fault);
FaultSet fault_set_from_json(const json& j);

// {"c": c, "pairs": [{"A": [...], "B": [...]}, ...]}
json wspd_to_json(const WSPD& w);
WSPD wspd_from_json(const json& j);

// max_ratio is written as the string "Infinity" when unbounded.
json stretch_report_to_json(const StretchReport& r);
StretchReport stretch_report_from_json(const json& j);

json verification_report_to_json(const VerificationReport& r);
VerificationReport verification_report_from_json(const json& j);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);
json read_json(const std::filesystem::path& path);

// .csv files are point sets; anything else is JSON as in metric_from_json.
Metric load_metric(const std::filesystem::path& path);
EuclideanPoints load_points(const std::filesystem::path& path);
WeightedGraph load_graph(const std::filesystem::path& path);

}  // namespace ftspan::io
