#include "ggm/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ggm {

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value has no rational form");
  return Rational(x);
}

double to_double(const Rational& q) { return q.get_d(); }

Rational snap_to_grid(double x, const BigInt& den) {
  if (den < 2) throw std::invalid_argument("grid denominator must be >= 2");
  Rational exact = rational_from_double(x) * Rational(den);
  BigInt n = exact.get_num(), d = exact.get_den(), twice_d = 2 * d, num;
  // round half away from zero
  if (sgn(n) >= 0) {
    mpz_fdiv_q(num.get_mpz_t(), BigInt(2 * n + d).get_mpz_t(), twice_d.get_mpz_t());
  } else {
    mpz_cdiv_q(num.get_mpz_t(), BigInt(2 * n - d).get_mpz_t(), twice_d.get_mpz_t());
  }
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto bad = [&] { return std::invalid_argument("malformed rational literal: " + text); };

  std::string s = text;
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (num.empty() || den.empty()) throw bad();
    BigInt n, d;
    if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0) throw bad();
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    Rational q(n, d);
    q.canonicalize();
    return q;
  }

  // plain integer or decimal with optional exponent
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = (s[pos++] == '-');
  std::string digits;
  long frac_digits = 0;
  bool saw_digit = false, saw_dot = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      saw_digit = true;
      if (saw_dot) ++frac_digits;
    } else if (c == '.' && !saw_dot) {
      saw_dot = true;
    } else if ((c == 'e' || c == 'E') && saw_digit) {
      break;
    } else {
      throw bad();
    }
  }
  if (!saw_digit) throw bad();
  long exponent = 0;
  if (pos < s.size()) {  // at 'e'
    ++pos;
    if (pos >= s.size()) throw bad();
    try {
      std::size_t used = 0;
      exponent = std::stol(s.substr(pos), &used);
      if (used != s.size() - pos) throw bad();
    } catch (const std::logic_error&) {
      throw bad();
    }
  }

  BigInt n;
  if (n.set_str(digits.empty() ? "0" : digits, 10) != 0) throw bad();
  if (negative) n = -n;
  long shift = exponent - frac_digits;
  BigInt pow10 = 1;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational q = shift >= 0 ? Rational(n * pow10) : Rational(n, pow10);
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal_string(const Rational& q, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, q.get_d());
  return buf;
}

}  // namespace ggm
