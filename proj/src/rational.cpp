#include "norden/rational.hpp"

namespace norden {

std::string to_string(const Rational& value) {
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  std::string out = num.str();
  if (den != 1) {
    out += "/";
    out += den.str();
  }
  return out;
}

std::optional<Rational> rational_sqrt(const Rational& value) {
  if (value < 0) return std::nullopt;
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  const Integer num_root = boost::multiprecision::sqrt(num);
  const Integer den_root = boost::multiprecision::sqrt(den);
  if (num_root * num_root != num || den_root * den_root != den) return std::nullopt;
  return Rational(num_root, den_root);
}

Rational rational_pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational square = base;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) result *= square;
    square *= square;
    e >>= 1;
  }
  return result;
}

}  // namespace norden
