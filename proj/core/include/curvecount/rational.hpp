#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace curvecount {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders a rational as "p/q", or "p" when the denominator is one.
std::string fraction_string(const Rational& q);

/// The single conversion point from exact to floating arithmetic.
double to_double(const Rational& q);

/// 17 significant digits, enough to round-trip any double.
std::string decimal_string(double x);

/// Exact b^e for a nonnegative exponent.
BigInt big_pow(const BigInt& b, unsigned e);
Rational rational_pow(const Rational& b, unsigned e);

}  // namespace curvecount
