#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace combpfaff {

// Exact arbitrary-precision coefficients. Symbolic determinant expansion
// overflows any fixed-width integer, so everything is a cpp_rational.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Renders "7", "-7", "3/2".
std::string rational_str(const Rational& value);

// Accepts an optional sign, digits, and an optional "/digits" part.
// Throws ParseError on anything else (floats are rejected on purpose).
Rational parse_rational(std::string_view text);

}  // namespace combpfaff
