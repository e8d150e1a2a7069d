#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ggm {

// Exact arbitrary-precision arithmetic. All zero tests on these types are
// decidable; no fixed-width overflow can occur.
using BigInt = mpz_class;
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }

// Exact conversion: every finite double is a dyadic rational.
Rational rational_from_double(double x);

double to_double(const Rational& q);

// Nearest rational with denominator `den` (round half away from zero).
Rational snap_to_grid(double x, const BigInt& den);

// Parses "3/4", "-12", "0.25", "2.5e-3". Exact; throws std::invalid_argument
// on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

// Canonical "p/q" form, plain "p" when q == 1.
std::string to_fraction_string(const Rational& q);

// Shortest-round-trip style decimal approximation.
std::string to_decimal_string(const Rational& q, int significant_digits = 12);

}  // namespace ggm
