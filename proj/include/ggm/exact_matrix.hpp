#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "ggm/graph.hpp"
#include "ggm/rational.hpp"

namespace ggm {

struct singular_matrix_error : std::runtime_error {
  explicit singular_matrix_error(const std::string& what) : std::runtime_error(what) {}
};

// Dense square matrix of exact rationals. Element access is 0-based; the
// node-set selection helpers below take 1-based node labels, matching every
// graph-facing interface.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Rational(0)) {}
  static RationalMatrix identity(int n);

  int size() const { return n_; }
  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const Rational& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }

  bool is_symmetric() const;
  bool operator==(const RationalMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

 private:
  int n_ = 0;
  std::vector<Rational> a_;
};

// Exact determinant by fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix. Zero is decided exactly.
Rational det_exact(const RationalMatrix& m);

// Exact inverse (Gauss-Jordan). Throws singular_matrix_error.
RationalMatrix invert_exact(const RationalMatrix& m);

// Sylvester criterion via the Bareiss pivots (= leading principal minors).
// Input must be symmetric.
bool is_positive_definite_exact(const RationalMatrix& m);

// Submatrix on the given 1-based row/column labels, in the order given.
RationalMatrix select_submatrix(const RationalMatrix& m, const std::vector<int>& rows,
                                const std::vector<int>& cols);

// The cross submatrix of a couple (ij|K): rows i,K and columns j,K with the
// distinguished node first and K ascending.
RationalMatrix cross_submatrix(const RationalMatrix& m, const Couple& c);

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

// Off-diagonal support as a graph (edge iff entry nonzero). Requires symmetry.
Graph matrix_support(const RationalMatrix& m);

// supp(M) = G with self-loops: off-diagonal support equals g's edges and the
// whole diagonal is nonzero.
bool has_support(const RationalMatrix& m, const Graph& g);

}  // namespace ggm
