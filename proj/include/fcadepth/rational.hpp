#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fcadepth {

/// Exact arbitrary-precision rational used for all weights and depths.
using Rational = boost::multiprecision::cpp_rational;

/// Always "p/q", also for integers ("1/1", "0/1").
std::string to_string(const Rational& r);

/// Accepts "p/q", integers and plain decimals ("0.25" is read as 1/4).
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

}  // namespace fcadepth
