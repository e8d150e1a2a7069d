#pragma once

#include <cstdint>
#include <vector>

#include "ggm/parametrization.hpp"
#include "ggm/polynomial.hpp"
#include "ggm/sampler.hpp"

namespace ggm {

// All couples whose cross-minor vanishes, decided exactly.
Relation vanishing_relation(const RationalMatrix& m);
// Floating surrogate using the Hadamard-scaled zero test; indicative only.
Relation vanishing_relation_float(const FloatMatrix& m, const ZeroTolerancePolicy& policy = {});

// The conditional independencies of a centered Gaussian with this
// covariance: couples (ij|K) with |Sigma_{iK,jK}| = 0.
Relation ci_relation(const MarkovianCovariance& sigma);

// Couples where the vanishing pattern stays identically zero in the
// polynomial ring over all eps. Requires d <= kMaxSymbolicNodes.
Relation symbolic_vanishing_relation(const DeltaAssignment& delta);

struct PerfectnessVerdict {
  enum class WitnessKind { ci_without_separation, separation_without_ci };
  struct Witness {
    Couple couple;
    WitnessKind kind;
  };
  bool perfect = false;
  std::vector<Witness> witnesses;  // empty iff perfect
  Backend backend = Backend::exact;
};

const char* to_string(PerfectnessVerdict::WitnessKind kind);

// Decides whether the vanishing relation of a supported precision matrix
// equals the dual of the graph's separation relation; equality certifies
// Markov perfectness of the inverse covariance. Checks symmetry, positive
// definiteness and support first (argument errors).
PerfectnessVerdict check_perfect(const RationalMatrix& a, const Graph& g);
// Variant with the expected relation (dual of separation) precomputed.
PerfectnessVerdict check_perfect(const RationalMatrix& a, const Graph& g,
                                 const Relation& dual_separation);
PerfectnessVerdict check_perfect_float(const FloatMatrix& a, const Graph& g,
                                       const ZeroTolerancePolicy& policy = {});

// Path-sum cancellation scan: for every node pair and every path length,
// the sum of weight products over all connecting paths of that length must
// be nonzero. Reports every cancelling (i, j, t).
struct PathSumReport {
  struct Cancellation {
    int i = 0, j = 0;
    int interior = 0;  // number of interior nodes of the cancelling length
    Rational sum;      // always zero; kept for the report format
    int path_count = 0;
  };
  bool cancellation_free = true;
  std::vector<Cancellation> cancellations;
};
PathSumReport path_sum_check(const DeltaAssignment& delta);

// The exceptional eps values for a fixed weight assignment: real roots,
// inside the open admissible interval, of the nonzero couple minors that
// separation does not force to vanish. Roots are reported as exact
// isolating intervals, never bare floats.
struct BadEpsReport {
  struct Root {
    RootInterval where;
    std::vector<Couple> responsible;
  };
  std::vector<Root> roots;  // sorted by interval position
  // Couples whose minor is identically zero although the dual conditioning
  // set does not separate the endpoints; every eps is exceptional for them
  // (weight cancellation outside the good set).
  std::vector<Couple> degenerate;
  bool eps_unbounded = false;   // edgeless graph
  RootInterval eps_max_bounds;  // isolating interval for the interval end
};
BadEpsReport find_bad_eps(const DeltaAssignment& delta);

struct MonteCarloReport {
  struct Failure {
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    PerfectnessVerdict verdict;
  };
  int trials = 0;
  int perfect_count = 0;
  std::vector<Failure> failures;
  double perfect_fraction() const { return trials == 0 ? 1.0 : double(perfect_count) / trials; }
};

// Samples `trials` precision matrices (trial k on its own derived stream)
// and checks each one exactly.
MonteCarloReport montecarlo_perfectness(const Graph& g, int trials, const SamplerConfig& config);

}  // namespace ggm
