#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace sheafcx {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_exact_string(const Rational& q);

/// Fixed-point rendering, rounded half away from zero.
std::string to_decimal_string(const Rational& q, int places = 6);

double to_double(const Rational& q);

/// Accepts "7", "-7", "5/2" and finite decimals such as "0.6" or "2.25".
/// Throws ParseError (line 0) on anything else.
Rational parse_rational(std::string_view text);

}  // namespace sheafcx
