#include "ggm/perfectness.hpp"

#include <algorithm>
#include <stdexcept>

#include "ggm/parallel.hpp"

namespace ggm {

Relation vanishing_relation(const RationalMatrix& m) {
  const int d = m.size();
  const auto couples = all_couples(d);
  const auto vanish = parallel_map<char>(couples.size(), [&](std::size_t k) {
    return static_cast<char>(det_exact(cross_submatrix(m, couples[k])) == 0);
  });
  Relation out;
  for (std::size_t k = 0; k < couples.size(); ++k) {
    if (vanish[k]) out.insert(couples[k]);
  }
  return out;
}

Relation vanishing_relation_float(const FloatMatrix& m, const ZeroTolerancePolicy& policy) {
  Relation out;
  for_each_couple(static_cast<int>(m.rows()), [&](const Couple& c) {
    if (determinant_is_zero(cross_submatrix(m, c), policy)) out.insert(c);
  });
  return out;
}

Relation ci_relation(const MarkovianCovariance& sigma) { return vanishing_relation(sigma.matrix); }

Relation symbolic_vanishing_relation(const DeltaAssignment& delta) {
  const int d = delta.graph().node_count();
  if (d > kMaxSymbolicNodes) {
    throw std::invalid_argument("symbolic relation sweep capped at " +
                                std::to_string(kMaxSymbolicNodes) + " nodes");
  }
  const PolyMatrix a = build_precision_poly(delta);
  const auto couples = all_couples(d);
  const auto vanish = parallel_map<char>(couples.size(), [&](std::size_t k) {
    return static_cast<char>(determinant(a.cross_submatrix(couples[k])).is_zero());
  });
  Relation out;
  for (std::size_t k = 0; k < couples.size(); ++k) {
    if (vanish[k]) out.insert(couples[k]);
  }
  return out;
}

const char* to_string(PerfectnessVerdict::WitnessKind kind) {
  return kind == PerfectnessVerdict::WitnessKind::ci_without_separation
             ? "CI-without-separation"
             : "separation-without-CI";
}

namespace {

PerfectnessVerdict compare_relations(const Relation& actual_vanishing,
                                     const Relation& dual_separation, Backend backend) {
  PerfectnessVerdict verdict;
  verdict.backend = backend;
  for (const auto& c : dual_separation) {
    if (!actual_vanishing.contains(c)) {
      verdict.witnesses.push_back({c, PerfectnessVerdict::WitnessKind::separation_without_ci});
    }
  }
  for (const auto& c : actual_vanishing) {
    if (!dual_separation.contains(c)) {
      verdict.witnesses.push_back({c, PerfectnessVerdict::WitnessKind::ci_without_separation});
    }
  }
  verdict.perfect = verdict.witnesses.empty();
  return verdict;
}

void check_precision_argument(const RationalMatrix& a, const Graph& g) {
  if (a.size() != g.node_count()) throw std::invalid_argument("matrix size does not match graph");
  if (!a.is_symmetric()) throw std::invalid_argument("precision matrix must be symmetric");
  if (!is_positive_definite_exact(a)) {
    throw std::invalid_argument("precision matrix must be positive definite");
  }
  if (!has_support(a, g)) {
    throw std::invalid_argument("precision matrix support does not match the graph");
  }
}

}  // namespace

PerfectnessVerdict check_perfect(const RationalMatrix& a, const Graph& g) {
  return check_perfect(a, g, dual(separation_relation(g), g.node_count()));
}

PerfectnessVerdict check_perfect(const RationalMatrix& a, const Graph& g,
                                 const Relation& dual_separation) {
  check_precision_argument(a, g);
  return compare_relations(vanishing_relation(a), dual_separation, Backend::exact);
}

PerfectnessVerdict check_perfect_float(const FloatMatrix& a, const Graph& g,
                                       const ZeroTolerancePolicy& policy) {
  require_symmetric(a);
  if (!is_positive_definite(a)) throw std::invalid_argument("precision matrix must be positive definite");
  return compare_relations(vanishing_relation_float(a, policy),
                           dual(separation_relation(g), g.node_count()), Backend::floating);
}

PathSumReport path_sum_check(const DeltaAssignment& delta) {
  const Graph& g = delta.graph();
  const int d = g.node_count();
  PathSumReport report;
  for (int i = 1; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j) {
      std::vector<int> interior;
      for (int v = 1; v <= d; ++v) {
        if (v != i && v != j) interior.push_back(v);
      }
      for (int t = 0; t <= d - 2; ++t) {
        const auto paths = enumerate_paths(g, i, j, t, interior);
        if (paths.empty()) continue;
        Rational sum(0);
        for (const auto& p : paths) {
          Rational product(1);
          for (std::size_t k = 0; k + 1 < p.nodes.size(); ++k) {
            product *= delta.value(p.nodes[k], p.nodes[k + 1]);
          }
          sum += product;
        }
        if (sum == 0) {
          report.cancellation_free = false;
          report.cancellations.push_back({i, j, t, sum, static_cast<int>(paths.size())});
        }
      }
    }
  }
  return report;
}

namespace {

// One bisection step on an isolating interval; exact rational signs.
void refine_step(RootInterval& iv, const Polynomial& p) {
  if (iv.is_exact()) return;
  const Rational mid = iv.midpoint();
  const int sm = sign(p.evaluate(mid));
  if (sm == 0) {
    iv.lo = iv.hi = mid;
  } else if (sm == sign(p.evaluate(iv.lo))) {
    iv.lo = mid;
  } else {
    iv.hi = mid;
  }
}

bool intervals_disjoint(const RootInterval& a, const RootInterval& b) {
  return a.hi <= b.lo || b.hi <= a.lo;
}

// Whether the roots isolated by (a, pa) and (b, pb) are the same algebraic
// number. Exact endpoints make the test a polynomial evaluation; otherwise a
// gcd root count over the overlap decides.
bool same_root(const RootInterval& a, const Polynomial& pa, const RootInterval& b,
               const Polynomial& pb) {
  if (a.is_exact() && b.is_exact()) return a.lo == b.lo;
  if (a.is_exact()) return b.lo <= a.lo && a.lo <= b.hi && pb.evaluate(a.lo) == 0;
  if (b.is_exact()) return a.lo <= b.lo && b.lo <= a.hi && pa.evaluate(b.lo) == 0;
  if (intervals_disjoint(a, b)) return false;
  const Polynomial common = Polynomial::gcd(pa, pb);
  if (common.degree() < 1) return false;
  const Rational lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
  return count_real_roots(common, lo, hi) > 0;
}

// Orders two distinct isolated roots; refines both intervals until disjoint.
bool root_strictly_below(RootInterval& a, const Polynomial& pa, RootInterval& b,
                         const Polynomial& pb) {
  for (int step = 0; step < 4096; ++step) {
    if (a.hi <= b.lo) return true;
    if (b.hi <= a.lo) return false;
    refine_step(a, pa);
    refine_step(b, pb);
    if (a.is_exact() && b.is_exact()) return a.lo < b.lo;
  }
  throw std::logic_error("failed to separate two isolating intervals");
}

}  // namespace

BadEpsReport find_bad_eps(const DeltaAssignment& delta) {
  const Graph& g = delta.graph();
  const int d = g.node_count();
  if (d > kMaxSymbolicNodes) {
    throw std::invalid_argument("symbolic sweep capped at " + std::to_string(kMaxSymbolicNodes) +
                                " nodes");
  }
  BadEpsReport report;
  if (g.edge_count() == 0) {
    report.eps_unbounded = true;
    return report;
  }

  const PolyMatrix a = build_precision_poly(delta);
  const Polynomial char_like = determinant(a);  // value 1 at zero, first positive root = eps_max
  const Rational upper = Rational(1) / delta.max_abs() + 1;
  const auto char_roots = isolate_real_roots(char_like, 0, upper, default_root_width());
  if (char_roots.empty()) {
    throw std::logic_error("parametrized determinant lost its positive root");
  }
  RootInterval eps_iv = char_roots.front();
  report.eps_max_bounds = eps_iv;

  const Relation required = dual(separation_relation(g), d);
  const auto couples = all_couples(d);

  struct CoupleMinor {
    Polynomial p;
    bool degenerate = false;
  };
  const auto minors = parallel_map<CoupleMinor>(couples.size(), [&](std::size_t k) {
    CoupleMinor cm;
    cm.p = determinant(a.cross_submatrix(couples[k]));
    cm.degenerate = cm.p.is_zero() && !required.contains(couples[k]);
    return cm;
  });

  struct Candidate {
    RootInterval iv;
    Polynomial p;
    Couple couple;
  };
  std::vector<Candidate> pool;
  for (std::size_t k = 0; k < couples.size(); ++k) {
    if (minors[k].degenerate) {
      report.degenerate.push_back(couples[k]);
      continue;
    }
    const Polynomial& p = minors[k].p;
    if (p.is_zero()) continue;  // vanishing both required and identically satisfied
    for (auto& root : isolate_real_roots(p, 0, eps_iv.hi, default_root_width())) {
      bool inside;
      if (root.is_exact()) {
        // rational candidate: eps < eps_max iff the precision matrix is PD
        inside = is_positive_definite_exact(build_precision(delta, root.lo));
      } else if (root.hi <= eps_iv.lo) {
        inside = true;
      } else if (same_root(root, p, eps_iv, char_like)) {
        inside = false;  // the candidate *is* the interval end
      } else {
        inside = root_strictly_below(root, p, eps_iv, char_like);
      }
      if (inside) pool.push_back({std::move(root), p, couples[k]});
    }
  }

  // Merge candidates that isolate the same algebraic number.
  struct Merged {
    RootInterval iv;
    Polynomial p;
    std::vector<Couple> couples;
  };
  std::vector<Merged> merged;
  for (auto& cand : pool) {
    bool absorbed = false;
    for (auto& m : merged) {
      if (same_root(cand.iv, cand.p, m.iv, m.p)) {
        m.iv.lo = std::max(m.iv.lo, cand.iv.lo);
        m.iv.hi = std::min(m.iv.hi, cand.iv.hi);
        if (cand.iv.is_exact()) m.iv = cand.iv;
        m.couples.push_back(cand.couple);
        absorbed = true;
        break;
      }
      if (!intervals_disjoint(cand.iv, m.iv)) {
        root_strictly_below(cand.iv, cand.p, m.iv, m.p);  // refine both apart
      }
    }
    if (!absorbed) merged.push_back({cand.iv, cand.p, {cand.couple}});
  }
  std::sort(merged.begin(), merged.end(),
            [](const Merged& x, const Merged& y) { return x.iv.lo < y.iv.lo; });
  for (auto& m : merged) {
    std::sort(m.couples.begin(), m.couples.end());
    report.roots.push_back({m.iv, std::move(m.couples)});
  }
  return report;
}

MonteCarloReport montecarlo_perfectness(const Graph& g, int trials, const SamplerConfig& config) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  const Relation expected = dual(separation_relation(g), g.node_count());

  struct TrialResult {
    bool perfect = false;
    std::uint64_t seed = 0;
    PerfectnessVerdict verdict;
  };
  const auto results = parallel_map<TrialResult>(
      static_cast<std::size_t>(trials),
      [&](std::size_t k) {
        SamplerConfig trial_config = config;
        trial_config.seed = derive_seed(config.seed, k);
        const SampleDraw draw = sample_parameter_point(g, trial_config);
        const RationalMatrix a = draw.degenerate
                                     ? RationalMatrix::identity(g.node_count())
                                     : build_precision(draw.point.delta, draw.point.eps);
        TrialResult r;
        r.seed = trial_config.seed;
        r.verdict = check_perfect(a, g, expected);
        r.perfect = r.verdict.perfect;
        return r;
      },
      8);

  MonteCarloReport report;
  report.trials = trials;
  for (std::size_t k = 0; k < results.size(); ++k) {
    if (results[k].perfect) {
      ++report.perfect_count;
    } else {
      report.failures.push_back({k, results[k].seed, results[k].verdict});
    }
  }
  return report;
}

}  // namespace ggm
