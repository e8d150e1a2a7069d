#include "ggm/parametrization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ggm {

DeltaAssignment::DeltaAssignment(Graph graph, std::vector<Rational> values)
    : graph_(std::move(graph)), values_(std::move(values)) {
  if (values_.size() != graph_.edges().size()) {
    throw std::invalid_argument("need exactly one weight per edge");
  }
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k] == 0) {
      const auto& e = graph_.edges()[k];
      throw std::invalid_argument("zero weight on edge (" + std::to_string(e.first) + "," +
                                  std::to_string(e.second) + ")");
    }
    if (abs(values_[k]) > 1) {
      const auto& e = graph_.edges()[k];
      throw std::invalid_argument("weight on edge (" + std::to_string(e.first) + "," +
                                  std::to_string(e.second) + ") outside [-1,1]");
    }
  }
}

DeltaAssignment DeltaAssignment::from_map(const Graph& graph,
                                          const std::map<std::pair<int, int>, Rational>& values) {
  std::vector<Rational> aligned;
  aligned.reserve(graph.edges().size());
  std::size_t used = 0;
  for (const auto& e : graph.edges()) {
    auto it = values.find(e);
    if (it == values.end()) it = values.find({e.second, e.first});
    if (it == values.end()) {
      throw std::invalid_argument("missing weight for edge (" + std::to_string(e.first) + "," +
                                  std::to_string(e.second) + ")");
    }
    aligned.push_back(it->second);
    ++used;
  }
  if (values.size() != used) throw std::invalid_argument("weights given for non-edges");
  return DeltaAssignment(graph, std::move(aligned));
}

const Rational& DeltaAssignment::value(int i, int j) const {
  if (i > j) std::swap(i, j);
  const auto& edges = graph_.edges();
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(i, j));
  if (it == edges.end() || *it != std::make_pair(i, j)) {
    throw std::invalid_argument("no edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return values_[static_cast<std::size_t>(it - edges.begin())];
}

Rational DeltaAssignment::max_abs() const {
  Rational m(0);
  for (const auto& v : values_) m = std::max(m, Rational(abs(v)));
  return m;
}

RationalMatrix build_precision(const DeltaAssignment& delta, const Rational& eps) {
  if (eps < 0) throw std::invalid_argument("eps must be nonnegative");
  const Graph& g = delta.graph();
  RationalMatrix a = RationalMatrix::identity(g.node_count());
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& [i, j] = g.edges()[k];
    a(i - 1, j - 1) = delta.values()[k] * eps;
    a(j - 1, i - 1) = a(i - 1, j - 1);
  }
  return a;
}

FloatMatrix build_precision_float(const DeltaAssignment& delta, double eps) {
  if (eps < 0) throw std::invalid_argument("eps must be nonnegative");
  const Graph& g = delta.graph();
  FloatMatrix a = FloatMatrix::Identity(g.node_count(), g.node_count());
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& [i, j] = g.edges()[k];
    a(i - 1, j - 1) = a(j - 1, i - 1) = to_double(delta.values()[k]) * eps;
  }
  return a;
}

PolyMatrix build_precision_poly(const DeltaAssignment& delta) {
  const Graph& g = delta.graph();
  PolyMatrix a = PolyMatrix::identity(g.node_count());
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& [i, j] = g.edges()[k];
    a(i - 1, j - 1) = Polynomial::monomial(delta.values()[k], 1);
    a(j - 1, i - 1) = a(i - 1, j - 1);
  }
  return a;
}

FloatMatrix edge_pattern_matrix(const DeltaAssignment& delta) {
  const Graph& g = delta.graph();
  FloatMatrix p = FloatMatrix::Zero(g.node_count(), g.node_count());
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& [i, j] = g.edges()[k];
    p(i - 1, j - 1) = p(j - 1, i - 1) = to_double(delta.values()[k]);
  }
  return p;
}

double epsilon_max(const DeltaAssignment& delta) {
  const int g = delta.graph().edge_count();
  if (g == 0) return std::numeric_limits<double>::infinity();
  if (g == 1) return 1.0 / to_double(delta.max_abs());  // 2x2 closed form
  const double lambda_min = min_eigenvalue(edge_pattern_matrix(delta));
  // trace zero and a nonzero entry force lambda_min < 0
  return -1.0 / lambda_min;
}

DeltaAssignment normalize_linf(const DeltaAssignment& delta) {
  const Rational m = delta.max_abs();
  std::vector<Rational> scaled;
  scaled.reserve(delta.values().size());
  for (const auto& v : delta.values()) scaled.push_back(v / m);
  return DeltaAssignment(delta.graph(), std::move(scaled));
}

MarkovianCovariance markovian_covariance(const DeltaAssignment& delta, const Rational& eps) {
  const Graph& g = delta.graph();
  if (g.edge_count() > 0) {
    if (eps <= 0) throw std::domain_error("eps outside the admissible interval: must be positive");
    const RationalMatrix a = build_precision(delta, eps);
    if (!is_positive_definite_exact(a)) {
      throw std::domain_error("eps outside the admissible interval: precision not positive definite");
    }
    if (!has_support(a, g)) throw std::logic_error("parametrized precision lost its support");
    return MarkovianCovariance{invert_exact(a), g};
  }
  return MarkovianCovariance{RationalMatrix::identity(g.node_count()), g};
}

Graph inverse_support(const RationalMatrix& sigma) { return matrix_support(invert_exact(sigma)); }

bool is_markovian(const RationalMatrix& sigma, const Graph& g) {
  if (!sigma.is_symmetric()) throw std::invalid_argument("covariance must be symmetric");
  if (!is_positive_definite_exact(sigma)) {
    throw std::invalid_argument("covariance must be positive definite");
  }
  return has_support(invert_exact(sigma), g);
}

bool is_markovian_float(const FloatMatrix& sigma, const Graph& g,
                        const ZeroTolerancePolicy& policy) {
  require_symmetric(sigma);
  if (!is_positive_definite(sigma)) throw std::invalid_argument("covariance must be positive definite");
  if (sigma.rows() != g.node_count()) return false;
  const FloatMatrix inv = sigma.inverse();
  const double threshold = policy.tau * inv.cwiseAbs().maxCoeff();
  for (int i = 0; i < inv.rows(); ++i) {
    if (std::abs(inv(i, i)) <= threshold) return false;
    for (int j = i + 1; j < inv.cols(); ++j) {
      const bool nonzero = std::abs(inv(i, j)) > threshold;
      if (nonzero != g.has_edge(i + 1, j + 1)) return false;
    }
  }
  return true;
}

namespace {

// Exact square root of a rational, when one exists.
Rational rational_sqrt(const Rational& q) {
  if (q <= 0) throw std::invalid_argument("square root of a nonpositive rational");
  const BigInt &num = q.get_num(), &den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    throw std::invalid_argument(
        "diagonal entry " + to_fraction_string(q) +
        " is not a rational square; use the floating-point rescaling");
  }
  BigInt sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  Rational r(sn, sd);
  r.canonicalize();
  return r;
}

}  // namespace

std::pair<NormalizedPrecision, std::vector<Rational>> normalize_diagonal(const RationalMatrix& a) {
  if (!is_positive_definite_exact(a)) {
    throw std::invalid_argument("rescaling needs a positive definite matrix");
  }
  const int n = a.size();
  std::vector<Rational> d(n);
  for (int i = 0; i < n; ++i) d[i] = Rational(1) / rational_sqrt(a(i, i));
  RationalMatrix gamma = scale_diagonal(a, d);
  return {NormalizedPrecision{gamma, matrix_support(gamma)}, std::move(d)};
}

std::pair<FloatMatrix, Eigen::VectorXd> normalize_diagonal_float(const FloatMatrix& a) {
  if (!is_positive_definite(a)) throw std::invalid_argument("rescaling needs a positive definite matrix");
  const Eigen::VectorXd d = a.diagonal().cwiseSqrt().cwiseInverse();
  return {d.asDiagonal() * a * d.asDiagonal(), d};
}

RationalMatrix scale_diagonal(const RationalMatrix& a, const std::vector<Rational>& diag) {
  if (static_cast<int>(diag.size()) != a.size()) {
    throw std::invalid_argument("diagonal length mismatch");
  }
  for (const auto& v : diag) {
    if (v <= 0) throw std::invalid_argument("diagonal scaling must be positive");
  }
  RationalMatrix out(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) out(i, j) = diag[i] * a(i, j) * diag[j];
  return out;
}

}  // namespace ggm
