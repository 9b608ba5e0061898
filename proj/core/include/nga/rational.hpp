#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace nga {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction over arbitrary-precision integers. Always normalized:
/// gcd(|num|, den) = 1, den >= 1, zero is 0/1. Backed by boost::multiprecision.
using Rational = boost::multiprecision::cpp_rational;

/// n/d as a normalized fraction; the sign ends up on the numerator.
/// Throws InputError("division by zero") when d == 0.
Rational rat(long long n, long long d);
Rational rat(const BigInt& n, const BigInt& d);

BigInt numerator(const Rational& r);
BigInt denominator(const Rational& r);

/// Serialized form used by the JSON dump format: always "num/den", e.g. "-3/2", "0/1".
std::string fraction_string(const Rational& r);

/// Human-facing form: denominator omitted when it is 1.
std::string pretty_string(const Rational& r);

/// Accepts both "n" and "n/d" (optional sign, arbitrary precision).
Rational parse_rational(std::string_view text);

}  // namespace nga
