#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ggm/rational.hpp"

namespace ggm {

// Univariate polynomial over the exact rationals. Coefficient k is the
// coefficient of x^k; the zero polynomial has an empty coefficient vector
// and degree() == -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);
  static Polynomial variable() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(int k) const;
  const std::vector<Rational>& coefficients() const { return c_; }
  const Rational& leading() const;

  Rational evaluate(const Rational& x) const;
  Polynomial derivative() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& s) const;
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  // Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  // Division known to be exact; throws std::logic_error on a remainder.
  Polynomial exact_divide(const Polynomial& divisor) const;
  // Monic greatest common divisor.
  static Polynomial gcd(Polynomial a, Polynomial b);
  Polynomial square_free_part() const;

  std::string to_string() const;  // e.g. "1 - 2*x^2"

 private:
  void trim();
  std::vector<Rational> c_;
};

// An isolating interval for one real root: either an exact rational root
// (lo == hi) or an open interval (lo, hi) containing exactly one root with
// nonzero values at both ends.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool is_exact() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

// Distinct real roots of p in the open interval (lo, hi), isolated by Sturm
// sign variations and refined by bisection until hi - lo <= max_width.
// Throws std::invalid_argument for the zero polynomial.
std::vector<RootInterval> isolate_real_roots(const Polynomial& p, const Rational& lo,
                                             const Rational& hi, const Rational& max_width);

// Number of distinct real roots in the open interval (lo, hi).
int count_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi);

// Default isolation width, 1e-12.
const Rational& default_root_width();

}  // namespace ggm
