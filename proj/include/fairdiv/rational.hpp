#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <string_view>

namespace fairdiv {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational arithmetic for every utility, welfare value and threshold.
// cpp_rational keeps values in lowest terms with a positive denominator,
// which is exactly the representation the file format requires.
using Rational = boost::multiprecision::cpp_rational;

// Renders "p" when the denominator is 1, otherwise "p/q", lowest terms.
std::string format_rational(const Rational& value);

// Accepts the wire grammar `0 | [1-9][0-9]* ( "/" [1-9][0-9]* )?`.
// Values are non-negative by construction; anything else yields nullopt.
std::optional<Rational> parse_rational(std::string_view text);

}  // namespace fairdiv
