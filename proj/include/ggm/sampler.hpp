#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "ggm/parametrization.hpp"

namespace ggm {

enum class Backend { exact, floating };

std::string to_string(Backend b);
Backend backend_from_string(const std::string& name);

struct SamplerConfig {
  std::uint64_t seed = 0;
  Backend backend = Backend::exact;
  // Denominator bound used to snap exact-mode draws to a rational grid so
  // that downstream zero tests stay decidable.
  BigInt rational_grid = 1000000;
};

// The generator behind every stream; recorded in output metadata.
inline constexpr const char* kGeneratorName = "mt19937_64";

// 53-bit uniform on [0, 1); identical output on every platform.
double next_unit(std::mt19937_64& rng);
// Uniform on [-1, 1].
double next_symmetric(std::mt19937_64& rng);
// splitmix64 mix of a base seed and a stream index; used to give
// independent trials their own reproducible streams.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

struct ParamPoint {
  DeltaAssignment delta;
  Rational eps;
};

struct SampleDraw {
  ParamPoint point;
  std::vector<double> raw_delta;  // pre-normalization draws, edge order
  double eps_max_value = 0.0;     // interval end at the drawn delta
  bool degenerate = false;        // edgeless graph: identity fallback
};

struct CovarianceDraw {
  SampleDraw sample;
  std::optional<MarkovianCovariance> exact;  // present in exact mode
  FloatMatrix approx;                        // always present
};

// Infinite reproducible stream of draws from the uniform parameter measure:
// each raw weight uniform on [-1,1] excluding 0, normalized to unit sup-norm,
// eps uniform on the open admissible interval. Streams own their generator
// state; one stream is not shareable across threads.
class ProposalStream {
 public:
  ProposalStream(Graph graph, SamplerConfig config);

  SampleDraw next_point();
  CovarianceDraw next();
  std::uint64_t index() const { return index_; }
  const SamplerConfig& config() const { return config_; }

 private:
  Graph graph_;
  SamplerConfig config_;
  std::mt19937_64 rng_;
  std::uint64_t index_ = 0;
};

// One-shot draws; equal to the first element of a stream with the same seed.
SampleDraw sample_parameter_point(const Graph& graph, const SamplerConfig& config);
CovarianceDraw sample_covariance(const Graph& graph, const SamplerConfig& config);

}  // namespace ggm
