#include "ggm/sampler.hpp"

#include <cmath>
#include <stdexcept>

namespace ggm {

std::string to_string(Backend b) { return b == Backend::exact ? "exact" : "float"; }

Backend backend_from_string(const std::string& name) {
  if (name == "exact") return Backend::exact;
  if (name == "float" || name == "floating") return Backend::floating;
  throw std::invalid_argument("unknown backend: " + name);
}

double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double next_symmetric(std::mt19937_64& rng) { return 2.0 * next_unit(rng) - 1.0; }

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 (Steele, Lea & Flood)
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ProposalStream::ProposalStream(Graph graph, SamplerConfig config)
    : graph_(std::move(graph)), config_(std::move(config)), rng_(config_.seed) {
  if (config_.rational_grid < 2) throw std::invalid_argument("rational grid bound must be >= 2");
}

SampleDraw ProposalStream::next_point() {
  ++index_;
  const int edge_count = graph_.edge_count();
  if (edge_count == 0) {
    // Degenerate by contract: the only Markovian matrix family is {c*I}.
    DeltaAssignment delta(graph_, {});
    return SampleDraw{ParamPoint{std::move(delta), Rational(1)}, {}, 0.0, true};
  }

  const bool exact = config_.backend == Backend::exact;
  for (int attempt = 0; attempt < 1024; ++attempt) {
    std::vector<double> raw(edge_count);
    for (double& v : raw) v = next_symmetric(rng_);

    std::vector<Rational> weights(edge_count);
    bool zero_entry = false;
    for (int k = 0; k < edge_count; ++k) {
      weights[k] = exact ? snap_to_grid(raw[k], config_.rational_grid)
                         : rational_from_double(raw[k]);
      if (weights[k] == 0) {
        zero_entry = true;
        break;
      }
    }
    if (zero_entry) continue;  // redraw; the excluded set has probability ~0

    Rational max_abs(0);
    for (const auto& w : weights) max_abs = std::max(max_abs, Rational(abs(w)));
    for (auto& w : weights) w /= max_abs;
    DeltaAssignment delta(graph_, std::move(weights));

    const double eps_end = epsilon_max(delta);
    const double u = next_unit(rng_);

    if (!exact) {
      const double eps_float = std::min(u * eps_end, (1.0 - 1e-12) * eps_end);
      if (eps_float <= 0.0) continue;
      return SampleDraw{ParamPoint{std::move(delta), rational_from_double(eps_float)}, raw,
                        eps_end, false};
    }

    // Exact mode: snap eps to the grid, then certify eps < eps_max by exact
    // definiteness of the precision matrix (no irrational eigenvalues enter).
    BigInt grid = config_.rational_grid;
    for (int refine = 0; refine < 64; ++refine, grid *= 2) {
      const Rational eps = snap_to_grid(u * eps_end, grid);
      if (eps <= 0) continue;
      if (is_positive_definite_exact(build_precision(delta, eps))) {
        return SampleDraw{ParamPoint{std::move(delta), eps}, raw, eps_end, false};
      }
      // Snapped value landed at or above the true interval end; a finer grid
      // rounds it back inside.
    }
  }
  throw std::runtime_error("sampler failed to produce an admissible draw");
}

CovarianceDraw ProposalStream::next() {
  SampleDraw draw = next_point();
  CovarianceDraw out{std::move(draw), std::nullopt, FloatMatrix()};
  const auto& point = out.sample.point;
  if (config_.backend == Backend::exact) {
    out.exact = out.sample.degenerate
                    ? MarkovianCovariance{RationalMatrix::identity(graph_.node_count()), graph_}
                    : markovian_covariance(point.delta, point.eps);
    out.approx = to_float(out.exact->matrix);
  } else {
    const FloatMatrix a = build_precision_float(point.delta, to_double(point.eps));
    out.approx = a.inverse();
  }
  return out;
}

SampleDraw sample_parameter_point(const Graph& graph, const SamplerConfig& config) {
  ProposalStream stream(graph, config);
  return stream.next_point();
}

CovarianceDraw sample_covariance(const Graph& graph, const SamplerConfig& config) {
  ProposalStream stream(graph, config);
  return stream.next();
}

}  // namespace ggm
