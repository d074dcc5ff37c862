#include "pheis/expr.hpp"

#include <cctype>
#include <vector>

#include "pheis/brackets.hpp"
#include "pheis/modes.hpp"

namespace pheis {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) throw ParseError(pos, std::string("expected '") + c + "' (" + what + ")");
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (text.substr(pos, w.size()) == w) {
      pos += w.size();
      return true;
    }
    return false;
  }

  long integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError(pos, "expected an integer");
    if (pos - start > 9) throw ParseError(start, "integer literal too long");
    return std::stol(std::string(text.substr(start, pos - start)));
  }

  Rational scalar() {
    skip_ws();
    std::size_t start = pos;
    bool neg = accept('-');
    long num = integer();
    long den = 1;
    if (accept('/')) den = integer();
    if (den == 0) throw ParseError(start, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return neg ? Rational(-r) : r;
  }
};

struct Atom {
  bool square = false;
  int n = 0;      // the mode is h(-n) or h[-n], n >= 1
  int power = 1;
  std::size_t pos = 0;
};

}  // namespace

FockState parse_state(std::string_view text, int degree_cap) {
  Cursor cur{text};
  FockState total;

  bool first_term = true;
  while (true) {
    Rational sign(1);
    if (!first_term) {
      if (cur.done()) break;
      if (cur.accept('+')) {
        sign = 1;
      } else if (cur.accept('-')) {
        sign = -1;
      } else {
        throw ParseError(cur.pos, "expected '+' or '-' between terms");
      }
    }
    first_term = false;

    // optional leading scalar (requires '*')
    Rational coeff(1);
    char c = cur.peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      coeff = cur.scalar();
      cur.expect('*', "scalar must be followed by '*'");
    }

    std::vector<Atom> atoms;
    long total_weight = 0;
    while (true) {
      if (cur.accept_word("vac")) break;
      std::size_t at = cur.pos;
      if (!cur.accept('h')) {
        throw ParseError(cur.pos, "expected mode atom 'h(-n)', 'h[-n]' or 'vac'");
      }
      Atom a;
      a.pos = at;
      char open = cur.peek();
      if (open == '(') {
        cur.expect('(', "mode atom");
      } else if (open == '[') {
        a.square = true;
        cur.expect('[', "mode atom");
      } else {
        throw ParseError(cur.pos, "expected '(' or '[' after 'h'");
      }
      if (!cur.accept('-')) throw ParseError(cur.pos, "mode atoms must be creation modes h(-n)");
      long n = cur.integer();
      if (n <= 0) throw ParseError(at, "mode index must satisfy n >= 1");
      a.n = static_cast<int>(n);
      cur.expect(a.square ? ']' : ')', "mode atom");
      if (cur.accept('^')) {
        long e = cur.integer();
        if (e < 1) throw ParseError(at, "powers must be >= 1");
        a.power = static_cast<int>(e);
      }
      total_weight += static_cast<long>(a.n) * a.power;
      if (total_weight > degree_cap) {
        throw ParseError(at, "term exceeds the degree cap " + std::to_string(degree_cap));
      }
      atoms.push_back(a);
    }
    // rightmost atom acts first
    FockState term = FockState::vacuum();
    for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
      for (int k = 0; k < it->power; ++k) {
        term = it->square ? apply_h_bracket(-it->n, term) : apply_h(-it->n, term);
      }
    }
    term *= sign * coeff;
    total += term;

    if (cur.done()) break;
  }
  if (!cur.done()) throw ParseError(cur.pos, "trailing input");
  return total;
}

std::string print_state(const FockState& s) { return s.to_string(); }

}  // namespace pheis
