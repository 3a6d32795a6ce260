#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dfinv {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

/// Parses "p", "-p" or "p/q" (canonicalized).  Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

Integer floor(const Rational& q);

/// Representative of q mod 1 in [0, 1).
Rational frac(const Rational& q);

/// Least common multiple of the denominators of `v` (1 for an empty vector).
Integer common_denominator(std::span<const Rational> v);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Floor division with non-negative remainder, b != 0.
Integer floor_div(const Integer& a, const Integer& b);

/// Converts a small Integer to long; throws std::overflow_error otherwise.
long to_long(const Integer& z);

}  // namespace dfinv
