#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ggm/exact_matrix.hpp"
#include "ggm/float_matrix.hpp"
#include "ggm/graph.hpp"
#include "ggm/poly_matrix.hpp"

namespace ggm {

// One nonzero weight per edge of a graph, each in [-1, 1], symmetric by
// convention (the weight of {i,j} answers for both directions).
class DeltaAssignment {
 public:
  // values aligned with graph.edges() order.
  DeltaAssignment(Graph graph, std::vector<Rational> values);
  static DeltaAssignment from_map(const Graph& graph,
                                  const std::map<std::pair<int, int>, Rational>& values);

  const Graph& graph() const { return graph_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& value(int i, int j) const;  // unordered edge lookup
  Rational max_abs() const;

  bool operator==(const DeltaAssignment&) const = default;

 private:
  Graph graph_;
  std::vector<Rational> values_;
};

// The parametrized precision matrix: unit diagonal, delta*eps on edges, zero
// elsewhere. eps = 0 is allowed (gives the identity, used for definiteness
// scans); negative eps is an argument error.
RationalMatrix build_precision(const DeltaAssignment& delta, const Rational& eps);
FloatMatrix build_precision_float(const DeltaAssignment& delta, double eps);
// Same matrix with eps left as the polynomial variable.
PolyMatrix build_precision_poly(const DeltaAssignment& delta);

// Off-diagonal pattern matrix (delta on edges, zero elsewhere), the object
// whose smallest eigenvalue decides definiteness of the family.
FloatMatrix edge_pattern_matrix(const DeltaAssignment& delta);

// Largest eps keeping the precision matrix positive definite:
// -1/min_eigenvalue of the pattern matrix. +infinity for an edgeless graph.
double epsilon_max(const DeltaAssignment& delta);

// Scales so the largest absolute weight is exactly 1. Signs preserved.
DeltaAssignment normalize_linf(const DeltaAssignment& delta);

struct NormalizedPrecision {
  RationalMatrix matrix;  // unit diagonal, positive definite
  Graph support;
};

struct MarkovianCovariance {
  RationalMatrix matrix;  // exact inverse supported exactly on the graph
  Graph support_graph;
};

// Inverts the parametrized precision matrix. Requires (delta, eps) in the
// admissible open interval: eps > 0 and the precision matrix positive
// definite (verified exactly); throws std::domain_error otherwise.
MarkovianCovariance markovian_covariance(const DeltaAssignment& delta, const Rational& eps);

// Exact support of the inverse of a PD matrix.
Graph inverse_support(const RationalMatrix& sigma);

// supp(sigma^{-1}) equals g with self-loops, decided exactly.
bool is_markovian(const RationalMatrix& sigma, const Graph& g);
bool is_markovian_float(const FloatMatrix& sigma, const Graph& g,
                        const ZeroTolerancePolicy& policy = {});

// Diagonal rescaling to unit diagonal: Gamma = D*A*D with D = diag(A)^{-1/2}.
// The exact route requires every diagonal entry to be the square of a
// rational (throws std::invalid_argument otherwise); the floating route is
// unrestricted. Returns the diagonal of D alongside the normalized matrix.
std::pair<NormalizedPrecision, std::vector<Rational>> normalize_diagonal(
    const RationalMatrix& a);
std::pair<FloatMatrix, Eigen::VectorXd> normalize_diagonal_float(const FloatMatrix& a);

// D*A*D for a positive rational diagonal; keeps every cross-minor's
// vanishing pattern intact.
RationalMatrix scale_diagonal(const RationalMatrix& a, const std::vector<Rational>& diag);

}  // namespace ggm
