#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bouillabaisse {

using Integer = mpz_class;

/// Arbitrary-precision rational, always canonical (reduced, positive
/// denominator). GMP keeps results of arithmetic canonical; values built from
/// a numerator/denominator pair must go through make_rational.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "a" or "a/b" with optional leading sign. Throws ParseError.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Rational pow(const Rational& base, unsigned long exponent);

/// Decimal rendering truncated toward negative infinity at `digits`
/// fractional digits; used for display only.
std::string to_decimal_floor(const Rational& q, int digits);
std::string to_decimal_ceil(const Rational& q, int digits);

}  // namespace bouillabaisse
