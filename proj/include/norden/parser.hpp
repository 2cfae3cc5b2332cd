#pragma once

#include "norden/polynomial.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace norden {

/// Syntax or semantic error in scalar text, with the 0-based offset of the
/// offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the scalar grammar
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' posint)?
///   base   := rational | ident | '(' expr ')'
///   rational := int ('/' posint)?
///   ident  := 'l1'..'l12'
/// into a canonical polynomial. parse -> print -> parse is a fixed point.
Polynomial parse_scalar(std::string_view text);

}  // namespace norden
