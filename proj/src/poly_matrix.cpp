#include "ggm/poly_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace ggm {

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = Polynomial::constant(1);
  return m;
}

PolyMatrix PolyMatrix::select(const std::vector<int>& rows, const std::vector<int>& cols) const {
  if (rows.size() != cols.size()) throw std::invalid_argument("selection must be square");
  auto check = [&](int label) {
    if (label < 1 || label > n_) {
      throw std::invalid_argument("selection label out of range: " + std::to_string(label));
    }
  };
  PolyMatrix out(static_cast<int>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    check(rows[i]);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      check(cols[j]);
      out(static_cast<int>(i), static_cast<int>(j)) = (*this)(rows[i] - 1, cols[j] - 1);
    }
  }
  return out;
}

PolyMatrix PolyMatrix::cross_submatrix(const Couple& c) const {
  c.validate_for(n_);
  std::vector<int> rows{c.i}, cols{c.j};
  rows.insert(rows.end(), c.given.begin(), c.given.end());
  cols.insert(cols.end(), c.given.begin(), c.given.end());
  return select(rows, cols);
}

RationalMatrix PolyMatrix::evaluate(const Rational& x) const {
  RationalMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out(i, j) = (*this)(i, j).evaluate(x);
  return out;
}

Polynomial determinant(const PolyMatrix& m) {
  const int n = m.size();
  if (n == 0) return Polynomial::constant(1);
  PolyMatrix work = m;
  Polynomial prev = Polynomial::constant(1);
  int sgn_acc = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (work(k, k).is_zero()) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (!work(r, k).is_zero()) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return Polynomial();  // zero column: determinant vanishes
      for (int j = 0; j < n; ++j) std::swap(work(k, j), work(swap_row, j));
      sgn_acc = -sgn_acc;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        work(i, j) =
            (work(k, k) * work(i, j) - work(i, k) * work(k, j)).exact_divide(prev);
      }
      work(i, k) = Polynomial();
    }
    prev = work(k, k);
  }
  Polynomial det = work(n - 1, n - 1);
  return sgn_acc < 0 ? -det : det;
}

Polynomial determinant_by_interpolation(const PolyMatrix& m) {
  const int n = m.size();
  if (n == 0) return Polynomial::constant(1);
  int bound = 0;
  for (int i = 0; i < n; ++i) {
    int row_max = 0;
    for (int j = 0; j < n; ++j) row_max = std::max(row_max, std::max(0, m(i, j).degree()));
    bound += row_max;
  }
  // Newton divided differences on nodes 0, 1, ..., bound.
  std::vector<Rational> nodes(bound + 1), values(bound + 1);
  for (int k = 0; k <= bound; ++k) {
    nodes[k] = Rational(k);
    values[k] = det_exact(m.evaluate(nodes[k]));
  }
  std::vector<Rational> diffs = values;
  for (int level = 1; level <= bound; ++level) {
    for (int k = bound; k >= level; --k) {
      diffs[k] = (diffs[k] - diffs[k - 1]) / (nodes[k] - nodes[k - level]);
    }
  }
  Polynomial result = Polynomial::constant(diffs[bound]);
  for (int k = bound - 1; k >= 0; --k) {
    result = result * Polynomial({-nodes[k], Rational(1)}) + Polynomial::constant(diffs[k]);
  }
  return result;
}

PolyMatrix weighted_adjacency_poly(const DiGraph& h, const ArcWeights& weights) {
  const int r = h.node_count();
  for (const auto& [arc, w] : weights) {
    if (!h.has_arc(arc.first, arc.second)) {
      throw std::invalid_argument("weight given for missing arc (" + std::to_string(arc.first) +
                                  "," + std::to_string(arc.second) + ")");
    }
    if (w == 0) throw std::invalid_argument("arc weights must be nonzero");
  }
  PolyMatrix b(r);
  for (int i = 2; i <= r; ++i) b(i - 1, i - 1) = Polynomial::constant(1);
  for (const auto& [i, j] : h.arcs()) {
    auto it = weights.find({i, j});
    if (it == weights.end()) {
      throw std::invalid_argument("missing weight for arc (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
    }
    b(i - 1, j - 1) = Polynomial::monomial(it->second, 1);
  }
  return b;
}

CycleLemmaReport check_cycle_determinant(const DiGraph& h, const ArcWeights& weights) {
  const int r = h.node_count();
  if (r > kMaxSymbolicNodes) {
    throw std::invalid_argument("exhaustive cycle check capped at " +
                                std::to_string(kMaxSymbolicNodes) + " nodes");
  }
  CycleLemmaReport report;
  report.det = determinant(weighted_adjacency_poly(h, weights));
  report.det_is_zero = report.det.is_zero();

  for (int t = 0; t < r; ++t) {
    const auto cycles = enumerate_one_cycles(h, t);
    if (cycles.empty()) continue;
    report.one_cycles_exist = true;
    report.nonempty_lengths.push_back(t);
    Rational sum(0);
    for (const auto& cycle : cycles) {
      Rational product(1);
      for (std::size_t k = 0; k + 1 < cycle.nodes.size(); ++k) {
        product *= weights.at({cycle.nodes[k], cycle.nodes[k + 1]});
      }
      sum += product;
    }
    if (sum == 0) {
      report.cycle_sums_nonzero = false;
      report.cancelled_lengths.push_back(t);
    }
  }

  if (!report.one_cycles_exist) report.no_cycles_implies_zero = report.det_is_zero;
  if (report.cycle_sums_nonzero && report.det_is_zero) {
    report.zero_implies_no_cycles = !report.one_cycles_exist;
  }
  report.consistent = report.no_cycles_implies_zero && report.zero_implies_no_cycles;
  return report;
}

}  // namespace ggm
