#include "ggm/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ggm {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be nonnegative");
  std::vector<Rational> v(degree + 1, Rational(0));
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Polynomial::coeff(int k) const {
  static const Rational zero(0);
  if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
  return c_[k];
}

const Rational& Polynomial::leading() const {
  if (is_zero()) throw std::logic_error("zero polynomial has no leading coefficient");
  return c_.back();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Rational> out(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * Rational(static_cast<long>(k));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> out(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) out[k] = -c_[k];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t a = 0; a < c_.size(); ++a) {
    if (c_[a] == 0) continue;
    for (std::size_t b = 0; b < o.c_.size(); ++b) out[a + b] += c_[a] * o.c_[b];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rational& s) const {
  std::vector<Rational> out(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) out[k] = c_[k] * s;
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Rational> rem(a.c_);
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quot(a.degree() - db + 1, Rational(0));
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k] == 0) continue;
    const Rational f = rem[k] / b.c_[db];
    quot[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::exact_divide(const Polynomial& divisor) const {
  auto [q, r] = divmod(*this, divisor);
  if (!r.is_zero()) throw std::logic_error("polynomial division was not exact");
  return q;
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
    if (!b.is_zero()) b = b * (Rational(1) / b.leading());  // keep coefficients small
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.leading());
}

Polynomial Polynomial::square_free_part() const {
  if (is_zero()) return *this;
  if (degree() == 0) return Polynomial::constant(1);
  Polynomial g = gcd(*this, derivative());
  return exact_divide(g);
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    if (c_[k] == 0) continue;
    Rational c = c_[k];
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    const bool unit = (c == 1);
    if (k == 0 || !unit) os << to_fraction_string(c);
    if (k > 0) {
      if (!unit) os << "*";
      os << "x";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

namespace {

// Sturm chain of a square-free polynomial.
std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    const auto& s0 = chain[chain.size() - 2];
    const auto& s1 = chain.back();
    auto [q, r] = Polynomial::divmod(s0, s1);
    (void)q;
    if (r.is_zero()) break;
    chain.push_back(-r * (Rational(1) / abs(r.leading())));  // normalize magnitude, keep sign
  }
  return chain;
}

int sign_variations(const std::vector<Polynomial>& chain, const Rational& x) {
  int variations = 0, prev = 0;
  for (const auto& s : chain) {
    const int sg = sign(s.evaluate(x));
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++variations;
    prev = sg;
  }
  return variations;
}

// Strips roots at the interval ends so Sturm counts over (lo, hi) become
// exact; returns the deflated square-free polynomial.
Polynomial deflate_endpoints(Polynomial q, const Rational& lo, const Rational& hi) {
  for (const Rational& end : {lo, hi}) {
    if (!q.is_zero() && q.degree() >= 1 && q.evaluate(end) == 0) {
      q = q.exact_divide(Polynomial({-end, Rational(1)}));
    }
  }
  return q;
}

}  // namespace

const Rational& default_root_width() {
  static const Rational width(BigInt(1), BigInt("1000000000000"));
  return width;
}

int count_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("root counting needs a nonzero polynomial");
  if (lo >= hi) return 0;
  Polynomial q = deflate_endpoints(p.square_free_part(), lo, hi);
  if (q.degree() <= 0) return 0;
  const auto chain = sturm_chain(q);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

std::vector<RootInterval> isolate_real_roots(const Polynomial& p, const Rational& lo,
                                             const Rational& hi, const Rational& max_width) {
  if (p.is_zero()) throw std::invalid_argument("root isolation needs a nonzero polynomial");
  if (max_width <= 0) throw std::invalid_argument("isolation width must be positive");
  std::vector<RootInterval> exact_roots;
  if (lo >= hi) return exact_roots;

  Polynomial q = deflate_endpoints(p.square_free_part(), lo, hi);

  // Exact rational roots discovered mid-bisection are deflated out and the
  // isolation restarts on the quotient; each restart lowers the degree.
  std::vector<RootInterval> open_intervals;
  bool restart = true;
  while (restart) {
    restart = false;
    open_intervals.clear();
    if (q.degree() <= 0) break;
    const auto chain = sturm_chain(q);
    struct Segment {
      Rational a, b;
      int va, vb;
    };
    std::vector<Segment> stack{{lo, hi, sign_variations(chain, lo), sign_variations(chain, hi)}};
    while (!stack.empty()) {
      Segment s = stack.back();
      stack.pop_back();
      const int count = s.va - s.vb;
      if (count <= 0) continue;
      if (count == 1) {
        open_intervals.push_back({s.a, s.b});
        continue;
      }
      const Rational mid = (s.a + s.b) / 2;
      if (q.evaluate(mid) == 0) {
        exact_roots.push_back({mid, mid});
        q = q.exact_divide(Polynomial({-mid, Rational(1)}));
        restart = true;
        break;
      }
      const int vm = sign_variations(chain, mid);
      stack.push_back({s.a, mid, s.va, vm});
      stack.push_back({mid, s.b, vm, s.vb});
    }
  }

  // Refine; a single simple root in (a, b) with q(a), q(b) != 0 changes sign.
  std::vector<RootInterval> out = std::move(exact_roots);
  for (auto& iv : open_intervals) {
    Rational a = iv.lo, b = iv.hi;
    int sa = sign(q.evaluate(a));
    while (b - a > max_width) {
      const Rational mid = (a + b) / 2;
      const int sm = sign(q.evaluate(mid));
      if (sm == 0) {
        a = b = mid;
        break;
      }
      if (sm == sa) {
        a = mid;
      } else {
        b = mid;
      }
    }
    out.push_back({a, b});
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  return out;
}

}  // namespace ggm
