#pragma once

#include <gmpxx.h>

#include <string>

namespace cantor {

// Exact rational arithmetic is delegated to GMP's mpq_class, which keeps
// every value in canonical reduced form (gcd(num, den) == 1, den > 0).
// The helpers below add the parsing, printing and small power routines the
// rest of the library needs.
using Rational = mpq_class;

// Build num/den from machine integers.  den must be nonzero.
Rational make_rational(long num, long den = 1);

// Parse "p" or "p/q" with an optional leading '-' on p; q must be a
// positive integer.  Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

// Always renders as "p/q", even for integers ("3/1").
std::string fraction_string(const Rational& x);

// Decimal rendering truncated toward zero after `digits` fractional digits,
// e.g. decimal_string(Rational(17, 21), 10) == "0.8095238095".  Truncation,
// never rounding: every printed digit is a digit of the true expansion.
std::string decimal_string(const Rational& x, int digits);

// base^exp for exp >= 0.
Rational pow_rational(const Rational& base, unsigned long exp);

// 3^k for either sign of k.
Rational pow3(long k);

}  // namespace cantor
