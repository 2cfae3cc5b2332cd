#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace norden {

using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in canonical form (gcd-reduced,
/// positive denominator, zero is 0/1).
using Rational = boost::multiprecision::cpp_rational;

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

/// Exact nonnegative square root, or nullopt when none exists in Q.
std::optional<Rational> rational_sqrt(const Rational& value);

Rational rational_pow(const Rational& base, unsigned exponent);

}  // namespace norden
