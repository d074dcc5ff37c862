#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "pheis/fock.hpp"

namespace pheis {

// State-expression surface syntax:
//   expr := term (('+'|'-') term)*
//   term := [scalar '*'] atom+ 'vac'
//   atom := ('h(' '-' int ')' | 'h[' '-' int ']') ['^' int]
// Whitespace is insignificant; scalars are (signed) rationals.  Round-bracket
// atoms build basis monomials; square-bracket atoms act through
// apply_h_bracket; the rightmost atom acts first.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

FockState parse_state(std::string_view text, int degree_cap = 30);

/// Canonical printing (round-bracket monomials in canonical order);
/// parse(print(s)) == s and print is idempotent under reparsing.
std::string print_state(const FockState& s);

}  // namespace pheis
