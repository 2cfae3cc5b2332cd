#include "norden/polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace norden {

namespace {

int checked_number(int number) {
  if (number < 1 || number > kParameterCount)
    throw std::invalid_argument("parameter number out of range: " + std::to_string(number));
  return number;
}

}  // namespace

std::string parameter_name(int number) {
  return "l" + std::to_string(checked_number(number));
}

std::optional<int> parameter_number(std::string_view name) {
  if (name.size() < 2 || name.size() > 3 || name[0] != 'l') return std::nullopt;
  if (name[1] == '0') return std::nullopt;
  int value = 0;
  for (char c : name.substr(1)) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
  }
  if (value < 1 || value > kParameterCount) return std::nullopt;
  return value;
}

Monomial Monomial::parameter(int number, std::uint32_t power) {
  Monomial m;
  m.exponents_[checked_number(number) - 1] = power;
  return m;
}

std::uint32_t Monomial::exponent(int number) const {
  return exponents_[checked_number(number) - 1];
}

std::uint32_t Monomial::degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), std::uint32_t{0});
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (int i = 0; i < kParameterCount; ++i) out.exponents_[i] = exponents_[i] + other.exponents_[i];
  return out;
}

std::optional<Monomial> Monomial::divide_by(const Monomial& other) const {
  Monomial out;
  for (int i = 0; i < kParameterCount; ++i) {
    if (exponents_[i] < other.exponents_[i]) return std::nullopt;
    out.exponents_[i] = exponents_[i] - other.exponents_[i];
  }
  return out;
}

std::optional<Monomial> Monomial::sqrt() const {
  Monomial out;
  for (int i = 0; i < kParameterCount; ++i) {
    if (exponents_[i] % 2 != 0) return std::nullopt;
    out.exponents_[i] = exponents_[i] / 2;
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kParameterCount; ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  const std::uint32_t da = a.degree();
  const std::uint32_t db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (int i = 0; i < kParameterCount; ++i) {
    if (a.exponents_[i] != b.exponents_[i]) return a.exponents_[i] < b.exponents_[i] ? -1 : 1;
  }
  return 0;
}

std::string Monomial::str() const {
  std::string out;
  for (int i = 0; i < kParameterCount; ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += parameter_name(i + 1);
    if (exponents_[i] > 1) out += "^" + std::to_string(exponents_[i]);
  }
  return out.empty() ? "1" : out;
}

Assignment::Assignment(std::initializer_list<std::pair<std::string_view, Rational>> items) {
  for (const auto& [name, value] : items) set(name, value);
}

Assignment& Assignment::set(int number, Rational value) {
  values_[checked_number(number) - 1] = std::move(value);
  return *this;
}

Assignment& Assignment::set(std::string_view name, Rational value) {
  const auto number = parameter_number(name);
  if (!number) throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
  return set(*number, std::move(value));
}

const std::optional<Rational>& Assignment::get(int number) const {
  return values_[checked_number(number) - 1];
}

Polynomial::Polynomial(const Rational& value) {
  if (value != 0) terms_.emplace(Monomial{}, value);
}

Polynomial Polynomial::parameter(int number) {
  Polynomial p;
  p.terms_.emplace(Monomial::parameter(number), Rational(1));
  return p;
}

Polynomial Polynomial::parameter(std::string_view name) {
  const auto number = parameter_number(name);
  if (!number) throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
  return parameter(*number);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw std::domain_error("polynomial is not constant: " + str());
  return terms_.begin()->second;
}

std::uint32_t Polynomial::degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

void Polynomial::add_term(const Monomial& m, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial Polynomial::pow(std::uint32_t exponent) const {
  Polynomial result = 1;
  Polynomial square = *this;
  std::uint32_t e = exponent;
  while (e > 0) {
    if (e & 1u) result *= square;
    square *= square;
    e >>= 1;
  }
  return result;
}

Rational Polynomial::evaluate(const Assignment& point) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (int i = 1; i <= kParameterCount; ++i) {
      const std::uint32_t e = m.exponent(i);
      if (e == 0) continue;
      const auto& value = point.get(i);
      if (!value)
        throw std::invalid_argument("assignment is missing parameter " + parameter_name(i));
      term *= rational_pow(*value, e);
    }
    total += term;
  }
  return total;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.is_constant()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += m.str();
    } else {
      out += to_string(magnitude) + "*" + m.str();
    }
  }
  return out;
}

std::optional<Polynomial> perfect_square_root(const Polynomial& p) {
  if (p.is_zero()) return Polynomial{};
  const auto& [lead_mono, lead_coeff] = *p.terms().begin();
  const auto root_mono = lead_mono.sqrt();
  if (!root_mono) return std::nullopt;
  const auto root_coeff = rational_sqrt(lead_coeff);
  if (!root_coeff) return std::nullopt;

  Polynomial root;
  root.add_term(*root_mono, *root_coeff);
  const Rational twice_lead = 2 * *root_coeff;
  Polynomial residue = p - root * root;
  // Residue leading terms strictly decrease, so this terminates.
  while (!residue.is_zero()) {
    const auto& [rm, rc] = *residue.terms().begin();
    const auto quotient = rm.divide_by(*root_mono);
    if (!quotient) return std::nullopt;
    Polynomial term;
    term.add_term(*quotient, rc / twice_lead);
    root += term;
    residue = p - root * root;
  }
  return root;
}

}  // namespace norden
