#pragma once

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <filesystem>
#include <string>

#include "ggm/perfectness.hpp"
#include "ggm/poly_matrix.hpp"
#include "ggm/sampler.hpp"

namespace ggm {

using json = nlohmann::json;

struct file_format_error : std::runtime_error {
  explicit file_format_error(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr const char* kToolVersion = "0.1.0";

// FNV-1a over raw bytes; stable across platforms, used to fingerprint the
// input files recorded in a run manifest.
std::string fnv1a64_hex(const std::string& bytes);
std::string hash_file(const std::filesystem::path& path);

// Provenance block embedded in every output. The timestamp stays empty
// unless SOURCE_DATE_EPOCH is set, so identical inputs give identical bytes.
struct RunManifest {
  std::string command;
  std::string graph_hash;
  std::uint64_t seed = 0;
  std::string backend;
  double tolerance = 1e-9;
  std::string tool_version = kToolVersion;
  std::string rng = kGeneratorName;
  std::string timestamp;

  static RunManifest for_command(const std::string& command, const std::filesystem::path& graph);
  json to_json() const;
};

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

// Graph files: {"d": int, "edges": [[i, j], ...]} with 1-indexed i < j.
Graph graph_from_json(const json& j);
json graph_to_json(const Graph& g);
Graph load_graph(const std::filesystem::path& path);

// Digraph files: {"r": int, "arcs": [[i, j], ...]}.
DiGraph digraph_from_json(const json& j);
json digraph_to_json(const DiGraph& h);
DiGraph load_digraph(const std::filesystem::path& path);

// Weight maps keyed "i-j": rational strings or decimals.
DeltaAssignment delta_from_json(const json& j, const Graph& g);
json delta_to_json(const DeltaAssignment& delta, bool decimal = false);
DeltaAssignment load_delta(const std::filesystem::path& path, const Graph& g);
ArcWeights arc_weights_from_json(const json& j, const DiGraph& h);
ArcWeights load_arc_weights(const std::filesystem::path& path, const DiGraph& h);

// Exact matrices as JSON ({"n":, "entries": [["num/den", ...], ...]}),
// floating matrices as row-major decimal CSV.
RationalMatrix rational_matrix_from_json(const json& j);
json rational_matrix_to_json(const RationalMatrix& m, bool decimal = false);
RationalMatrix load_rational_matrix(const std::filesystem::path& path);
FloatMatrix float_matrix_from_csv(const std::string& text);
std::string float_matrix_to_csv(const FloatMatrix& m);
FloatMatrix load_float_matrix(const std::filesystem::path& path);

json couple_to_json(const Couple& c);
json relation_to_json(const Relation& r);
json verdict_to_json(const PerfectnessVerdict& v);
json path_sum_report_to_json(const PathSumReport& r, bool decimal = false);
json bad_eps_report_to_json(const BadEpsReport& r, bool decimal = false);
json cycle_lemma_report_to_json(const CycleLemmaReport& r);
json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

// Sample dumps: manifest record first, then one JSON line per draw.
std::string sample_dump_line(std::uint64_t seed_index, const SampleDraw& draw,
                             const CovarianceDraw* cov, bool decimal = false);

// Monte Carlo CSV summary: graph, trials, perfect_fraction, failure seeds.
std::string montecarlo_csv(const std::string& graph_name, const MonteCarloReport& report);

// Scatter CSV of (delta..., eps, eps_max) rows for external plotting.
std::string scatter_csv_header(const Graph& g);
std::string scatter_csv_row(const SampleDraw& draw);

}  // namespace ggm
