#include "ggm/float_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace ggm {

FloatMatrix to_float(const RationalMatrix& m) {
  FloatMatrix out(m.size(), m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) out(i, j) = to_double(m(i, j));
  return out;
}

void require_symmetric(const FloatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
  if (!m.allFinite()) throw std::invalid_argument("matrix has non-finite entries");
  const double scale = 1.0 + m.cwiseAbs().maxCoeff();
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("matrix is not symmetric");
  }
}

bool is_positive_definite(const FloatMatrix& m) {
  require_symmetric(m);
  Eigen::LLT<FloatMatrix> llt(m);
  return llt.info() == Eigen::Success && m.diagonal().minCoeff() > 0.0;
}

double min_eigenvalue(const FloatMatrix& m) {
  require_symmetric(m);
  Eigen::SelfAdjointEigenSolver<FloatMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue iteration failed");
  return solver.eigenvalues().minCoeff();
}

double hadamard_bound(const FloatMatrix& m) {
  double bound = 1.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) bound *= m.row(i).norm();
  return bound;
}

bool determinant_is_zero(const FloatMatrix& m, const ZeroTolerancePolicy& policy) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
  if (m.rows() == 0) return false;
  const double bound = hadamard_bound(m);
  if (bound == 0.0) return true;  // a zero row forces det = 0
  return std::abs(m.determinant()) < policy.tau * bound;
}

FloatMatrix select_submatrix(const FloatMatrix& m, const std::vector<int>& rows,
                             const std::vector<int>& cols) {
  auto check = [&](int label) {
    if (label < 1 || label > m.rows()) {
      throw std::invalid_argument("submatrix label out of range: " + std::to_string(label));
    }
  };
  FloatMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    check(rows[i]);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      check(cols[j]);
      out(i, j) = m(rows[i] - 1, cols[j] - 1);
    }
  }
  return out;
}

FloatMatrix cross_submatrix(const FloatMatrix& m, const Couple& c) {
  c.validate_for(static_cast<int>(m.rows()));
  std::vector<int> rows{c.i}, cols{c.j};
  rows.insert(rows.end(), c.given.begin(), c.given.end());
  cols.insert(cols.end(), c.given.begin(), c.given.end());
  return select_submatrix(m, rows, cols);
}

}  // namespace ggm
