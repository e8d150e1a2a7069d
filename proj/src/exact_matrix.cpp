#include "ggm/exact_matrix.hpp"

#include <algorithm>

namespace ggm {

namespace {

// Row-wise denominator clearing: returns the integer matrix and the product
// of the per-row scale factors (all positive, so minor signs are preserved).
std::pair<std::vector<BigInt>, BigInt> clear_denominators(const RationalMatrix& m) {
  const int n = m.size();
  std::vector<BigInt> b(static_cast<std::size_t>(n) * n);
  BigInt scale = 1;
  for (int i = 0; i < n; ++i) {
    BigInt row_lcm = 1;
    for (int j = 0; j < n; ++j) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    }
    for (int j = 0; j < n; ++j) {
      const Rational& q = m(i, j);
      b[static_cast<std::size_t>(i) * n + j] = q.get_num() * (row_lcm / q.get_den());
    }
    scale *= row_lcm;
  }
  return {std::move(b), std::move(scale)};
}

BigInt divexact(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Rational det_exact(const RationalMatrix& m) {
  const int n = m.size();
  if (n == 0) return 1;
  auto [b, scale] = clear_denominators(m);
  auto at = [&](int i, int j) -> BigInt& { return b[static_cast<std::size_t>(i) * n + j]; };

  BigInt prev = 1;
  int sgn_acc = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (at(r, k) != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sgn_acc = -sgn_acc;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        at(i, j) = divexact(at(k, k) * at(i, j) - at(i, k) * at(k, j), prev);
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  Rational det(sgn_acc * at(n - 1, n - 1), scale);
  det.canonicalize();
  return det;
}

bool is_positive_definite_exact(const RationalMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("positive definiteness needs a symmetric matrix");
  const int n = m.size();
  if (n == 0) return true;
  auto [b, scale] = clear_denominators(m);
  auto at = [&](int i, int j) -> BigInt& { return b[static_cast<std::size_t>(i) * n + j]; };

  // Bareiss pivots are the leading principal minors up to positive row
  // scales; a nonpositive pivot refutes definiteness and no swap is legal.
  BigInt prev = 1;
  for (int k = 0; k < n; ++k) {
    if (at(k, k) <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        at(i, j) = divexact(at(k, k) * at(i, j) - at(i, k) * at(k, j), prev);
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return true;
}

RationalMatrix invert_exact(const RationalMatrix& m) {
  const int n = m.size();
  RationalMatrix work = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (work(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw singular_matrix_error("matrix is singular");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Rational p = work(col, col);
    for (int j = 0; j < n; ++j) {
      work(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || work(r, col) == 0) continue;
      const Rational f = work(r, col);
      for (int j = 0; j < n; ++j) {
        work(r, j) -= f * work(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

RationalMatrix select_submatrix(const RationalMatrix& m, const std::vector<int>& rows,
                                const std::vector<int>& cols) {
  auto check = [&](int label) {
    if (label < 1 || label > m.size()) {
      throw std::invalid_argument("submatrix label " + std::to_string(label) +
                                  " out of range 1.." + std::to_string(m.size()));
    }
  };
  RationalMatrix out(static_cast<int>(rows.size()));
  if (rows.size() != cols.size()) throw std::invalid_argument("submatrix selection must be square");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    check(rows[i]);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      check(cols[j]);
      out(static_cast<int>(i), static_cast<int>(j)) = m(rows[i] - 1, cols[j] - 1);
    }
  }
  return out;
}

RationalMatrix cross_submatrix(const RationalMatrix& m, const Couple& c) {
  c.validate_for(m.size());
  std::vector<int> rows{c.i}, cols{c.j};
  rows.insert(rows.end(), c.given.begin(), c.given.end());
  cols.insert(cols.end(), c.given.begin(), c.given.end());
  return select_submatrix(m, rows, cols);
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("size mismatch in multiply");
  const int n = a.size();
  RationalMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < n; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Graph matrix_support(const RationalMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("support graph needs a symmetric matrix");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j)
      if (m(i, j) != 0) edges.emplace_back(i + 1, j + 1);
  return Graph(m.size(), std::move(edges));
}

bool has_support(const RationalMatrix& m, const Graph& g) {
  if (m.size() != g.node_count()) return false;
  for (int i = 0; i < m.size(); ++i) {
    if (m(i, i) == 0) return false;
    for (int j = i + 1; j < m.size(); ++j) {
      const bool nonzero = m(i, j) != 0 || m(j, i) != 0;
      if (nonzero != g.has_edge(i + 1, j + 1)) return false;
    }
  }
  return true;
}

}  // namespace ggm
