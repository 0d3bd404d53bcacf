#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace monarch {

using Integer = mpz_class;
using Rational = mpq_class;

/// C(n, r) as a big integer; 0 when r < 0 or r > n.
Integer binomial(long n, long r);

/// Sum of C(n, i) for 0 <= i < r (the "binom(n, <r)" prefix sum).
Integer binomial_prefix(long n, long r);

Integer pow2(unsigned long e);

/// Parses "p/q", an integer, or a plain decimal string ("0.125") exactly.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// Canonical "p/q" form ("p" when the denominator is 1).
std::string to_string(const Rational& q);

/// Decimal rendering with 12 significant digits (round half away from zero).
std::string to_decimal(const Rational& q, int sig_digits = 12);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace monarch
