#pragma once

#include <map>
#include <vector>

#include "ggm/exact_matrix.hpp"
#include "ggm/graph.hpp"
#include "ggm/polynomial.hpp"

namespace ggm {

// Exhaustive cycle enumeration is factorial; symbolic sweeps refuse larger
// inputs with a clear error.
inline constexpr int kMaxSymbolicNodes = 8;

// Square matrix of univariate rational polynomials.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {}
  static PolyMatrix identity(int n);

  int size() const { return n_; }
  Polynomial& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  const Polynomial& operator()(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * n_ + j];
  }

  PolyMatrix select(const std::vector<int>& rows, const std::vector<int>& cols) const;
  PolyMatrix cross_submatrix(const Couple& c) const;
  RationalMatrix evaluate(const Rational& x) const;

 private:
  int n_ = 0;
  std::vector<Polynomial> e_;
};

// Exact determinant polynomial by fraction-free elimination over the
// polynomial ring (division by the previous pivot is exact).
Polynomial determinant(const PolyMatrix& m);

// Independent route: evaluate at enough rational points, take exact numeric
// determinants, and interpolate by divided differences.
Polynomial determinant_by_interpolation(const PolyMatrix& m);

// Weights on directed arcs; keys are ordered pairs.
using ArcWeights = std::map<std::pair<int, int>, Rational>;

// The weighted symbolic adjacency matrix B(x) of a digraph with the
// distinguished node 1: unit diagonal except at node 1, weight*x on arcs,
// the (1,1) entry carrying the self-loop weight if present.
PolyMatrix weighted_adjacency_poly(const DiGraph& h, const ArcWeights& weights);

struct CycleLemmaReport {
  Polynomial det;                 // |B(x)|
  bool det_is_zero = false;       // identically zero in the polynomial ring
  bool one_cycles_exist = false;  // some cycle through node 1, any length
  std::vector<int> nonempty_lengths;   // interior sizes t with cycles present
  bool cycle_sums_nonzero = true;      // every nonempty length has a nonzero weight sum
  std::vector<int> cancelled_lengths;  // interior sizes t whose weight sum is zero
  bool no_cycles_implies_zero = true;  // unconditional direction
  bool zero_implies_no_cycles = true;  // checked only when cycle_sums_nonzero
  bool consistent = true;
};

// Verifies both directions of the determinant/cycle correspondence against
// exhaustive enumeration of cycles through node 1.
CycleLemmaReport check_cycle_determinant(const DiGraph& h, const ArcWeights& weights);

}  // namespace ggm
