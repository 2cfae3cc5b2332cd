#include "norden/parser.hpp"

#include <cctype>

namespace norden {

namespace {

constexpr std::uint32_t kMaxExponent = 256;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial run() {
    Polynomial value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return value;
  }

 private:
  Polynomial expr() {
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = take() == '-';
    Polynomial value = term();
    if (negate) value = -value;
    while (true) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') break;
      take();
      Polynomial rhs = term();
      if (c == '+')
        value += rhs;
      else
        value -= rhs;
    }
    return value;
  }

  Polynomial term() {
    Polynomial value = factor();
    while (true) {
      skip_space();
      if (peek() != '*') break;
      take();
      value *= factor();
    }
    return value;
  }

  Polynomial factor() {
    Polynomial value = base();
    skip_space();
    if (peek() == '^') {
      take();
      skip_space();
      const std::size_t at = pos_;
      const Integer e = digits();
      if (e > kMaxExponent) fail("exponent too large", at);
      value = value.pow(static_cast<std::uint32_t>(e));
    }
    return value;
  }

  Polynomial base() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      take();
      Polynomial value = expr();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      take();
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail(c == '\0' ? "unexpected end of input" : "expected a number, parameter or '('");
  }

  Polynomial rational() {
    const Integer num = digits();
    skip_space();
    if (peek() != '/') return Polynomial(Rational(num));
    take();
    skip_space();
    const std::size_t at = pos_;
    const Integer den = digits();
    if (den == 0) fail("zero denominator literal", at);
    return Polynomial(Rational(num, den));
  }

  Polynomial identifier() {
    const std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek()))) take();
    const std::string_view name = text_.substr(start, pos_ - start);
    const auto number = parameter_number(name);
    if (!number) fail("unknown identifier '" + std::string(name) + "'", start);
    return Polynomial::parameter(*number);
  }

  Integer digits() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    Integer value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) value = value * 10 + (take() - '0');
    return value;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }
  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    throw ParseError(message, at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_scalar(std::string_view text) { return Parser(text).run(); }

}  // namespace norden
