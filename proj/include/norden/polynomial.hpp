#pragma once

#include "norden/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace norden {

/// The closed parameter universe l1..l12. Keeping it fixed makes the
/// monomial order total and the text grammar unambiguous.
inline constexpr int kParameterCount = 12;

/// 1-based parameter number -> "l1".."l12".
std::string parameter_name(int number);

/// "l1".."l12" -> 1-based parameter number, nullopt for anything else.
std::optional<int> parameter_number(std::string_view name);

/// Power product of parameters. The empty exponent vector is the
/// constant monomial 1.
class Monomial {
 public:
  Monomial() : exponents_{} {}

  static Monomial parameter(int number, std::uint32_t power = 1);

  std::uint32_t exponent(int number) const;
  std::uint32_t degree() const;
  bool is_constant() const { return degree() == 0; }

  Monomial operator*(const Monomial& other) const;
  /// Componentwise quotient; nullopt when some exponent would go negative.
  std::optional<Monomial> divide_by(const Monomial& other) const;
  /// Halves every exponent; nullopt when one of them is odd.
  std::optional<Monomial> sqrt() const;
  bool divides(const Monomial& other) const;

  bool operator==(const Monomial& other) const = default;

  /// Graded lexicographic order: total degree first, then the exponent
  /// vector scanned from l1 upward.
  static int compare(const Monomial& a, const Monomial& b);

  std::string str() const;

 private:
  std::array<std::uint32_t, kParameterCount> exponents_;
};

/// Comparator that puts the leading monomial first.
struct MonomialDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::compare(a, b) > 0;
  }
};

/// Partial map from parameters to rational values.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<std::string_view, Rational>> items);

  Assignment& set(int number, Rational value);
  Assignment& set(std::string_view name, Rational value);
  const std::optional<Rational>& get(int number) const;

 private:
  std::array<std::optional<Rational>, kParameterCount> values_;
};

/// Exact multivariate polynomial over Q in l1..l12, stored canonically:
/// no zero coefficients, terms ordered leading-first. Equal polynomials
/// have identical term lists.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialDescending>;

  Polynomial() = default;  // zero
  Polynomial(int value) : Polynomial(Rational(value)) {}
  Polynomial(const Rational& value);

  static Polynomial parameter(int number);
  static Polynomial parameter(std::string_view name);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial; throws std::domain_error otherwise.
  Rational constant_value() const;

  std::uint32_t degree() const;
  const TermMap& terms() const { return terms_; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial pow(std::uint32_t exponent) const;

  bool operator==(const Polynomial& other) const = default;

  /// Exact value at a point; throws std::invalid_argument naming the first
  /// parameter of the polynomial missing from the assignment.
  Rational evaluate(const Assignment& point) const;

  std::string str() const;

  /// Internal: inserts coeff*m, merging and dropping a zero result.
  void add_term(const Monomial& m, const Rational& coeff);

 private:
  TermMap terms_;
};

Polynomial operator*(const Polynomial& a, const Polynomial& b);

/// q with q*q == p and positive leading coefficient, or nullopt when p is
/// not a square in the polynomial ring. Failure is a value, not an error.
std::optional<Polynomial> perfect_square_root(const Polynomial& p);

}  // namespace norden
