#pragma once

#include <Eigen/Dense>

#include "ggm/exact_matrix.hpp"
#include "ggm/graph.hpp"

namespace ggm {

using FloatMatrix = Eigen::MatrixXd;

// Hadamard-scaled threshold for the floating zero test. The scale invariance
// under row rescaling is the point of dividing by the Hadamard bound.
struct ZeroTolerancePolicy {
  double tau = 1e-9;
};

FloatMatrix to_float(const RationalMatrix& m);

// Throws std::invalid_argument on non-finite entries or asymmetry.
void require_symmetric(const FloatMatrix& m);

// Cholesky-based test; the floating surrogate of the exact criterion.
bool is_positive_definite(const FloatMatrix& m);

// Smallest eigenvalue of a symmetric matrix.
double min_eigenvalue(const FloatMatrix& m);

// Product of row Euclidean norms, an upper bound on |det|.
double hadamard_bound(const FloatMatrix& m);

// True iff |det(m)| < tau * hadamard_bound(m).
bool determinant_is_zero(const FloatMatrix& m, const ZeroTolerancePolicy& policy = {});

FloatMatrix select_submatrix(const FloatMatrix& m, const std::vector<int>& rows,
                             const std::vector<int>& cols);
FloatMatrix cross_submatrix(const FloatMatrix& m, const Couple& c);

}  // namespace ggm
