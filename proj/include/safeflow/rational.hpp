#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace safeflow {

// All flow values are exact rationals. Safety is the strict inequality
// f_P > 0, so no floating point appears anywhere in the library.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses a nonnegative integer or decimal literal ("7", "2.25") exactly.
/// Returns std::nullopt on malformed input.
std::optional<Rational> parse_rational(std::string_view text);

/// Renders a rational as "p" when integral, otherwise "p/q".
std::string to_string(const Rational& r);

}  // namespace safeflow
