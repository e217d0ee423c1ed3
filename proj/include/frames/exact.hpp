#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace frames {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// q^e, exact for any integer e.
Rational rpow(long long q, long long e);
/// q^e for e >= 0.
BigInt ipow(long long q, long long e);

/// "num/den" with a positive denominator.
std::string to_fraction_string(const Rational& r);
std::string to_string(const BigInt& v);

bool is_integer(const Rational& r);
/// Numerator when r is an integer.
std::optional<BigInt> as_integer(const Rational& r);
/// Value when it fits in a signed 64-bit integer.
std::optional<long long> as_int64(const BigInt& v);

}  // namespace frames
