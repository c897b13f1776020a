#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace boolfn {

// All exact arithmetic in this library runs on GMP-backed rationals; no
// floating point is used anywhere a result is asserted.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Parses "num", "-num" or "num/den" (den > 0 after canonicalization).
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Prints "num/den", omitting "/den" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// True when the value is a nonnegative integer.
bool is_nonnegative_integer(const Rational& value);

/// Exact binomial coefficient C(n, k); 0 when k > n.
BigInt binomial(unsigned n, unsigned k);

/// Double factorial (2k-1)!! = 1 * 3 * ... * (2k-1); 1 for k = 0.
BigInt odd_double_factorial(unsigned k);

/// Smallest integer m >= 0 with m * m >= value (value must be >= 0).
BigInt ceil_sqrt(const Rational& value);

}  // namespace boolfn
