#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace finbool {

// Exact arbitrary-precision rational.  All measure arithmetic in this
// project is exact; nothing is ever rounded to floating point.
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "-p", or "p/q" with q > 0 after sign normalization.
Rational parse_rational(std::string_view text);

// Canonical text: lowest terms, "p" for integers, otherwise "p/q".
std::string rational_str(const Rational& r);

// 2^(-e) as a rational.
Rational half_power(std::uint64_t e);

}  // namespace finbool
