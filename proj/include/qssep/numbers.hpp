#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace qssep {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", "p" or "-p/q" into a reduced rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p/q" with q omitted when it is 1.
std::string to_string(const Rational& value);

}  // namespace qssep
