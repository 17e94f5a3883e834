#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace displace {

/// Exact rational in lowest terms, backed by GMP.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

/// Parses "n", "n/d" or "-n/d"; the result is canonicalized.
Rational parse_rational(std::string_view text);

/// Always "numerator/denominator", e.g. "3/1", "-1/2".
std::string to_string(const Rational& q);

/// True when the denominator is a power of two.
bool is_dyadic(const Rational& q);

/// True when q = 2^k for some integer k (k may be negative).
bool is_power_of_two(const Rational& q);

}  // namespace displace
