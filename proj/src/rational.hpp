#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace credal {

// All exact arithmetic in the library runs on arbitrary-precision rationals.
// cpp_rational keeps values in lowest terms with a positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Largest integer <= x.
Int rational_floor(const Rational& x);

/// Smallest integer >= x.
Int rational_ceil(const Rational& x);

/// Parses "2", "-7", "3/10", "-1/3", "0.25" or ".5" into an exact rational.
/// Decimal literals convert exactly (e.g. "0.3" -> 3/10). Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Prints in lowest terms: "3/10" for fractions, "2" for integers.
std::string format_rational(const Rational& x);

double rational_to_double(const Rational& x);

} // namespace credal
