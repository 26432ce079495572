#include "cubicsym/parser.hpp"

#include <cctype>
#include <string>

#include "cubicsym/errors.hpp"

namespace cubicsym {
namespace {

struct Parser {
  std::string_view text;
  int nvars;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message + " at position " + std::to_string(pos), pos);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos == text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Int read_integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return Int(std::string(text.substr(start, pos - start)));
  }

  HomPolynomial parse_expr() {
    HomPolynomial value = parse_term();
    for (;;) {
      if (consume('+')) {
        value = checked_add(value, parse_term());
      } else if (peek() == '-') {
        ++pos;
        value = checked_add(value, parse_term().scale(-1));
      } else {
        return value;
      }
    }
  }

  HomPolynomial checked_add(const HomPolynomial& a, const HomPolynomial& b) {
    if (!a.is_zero() && !b.is_zero() && a.degree() != b.degree())
      throw DomainError("non-homogeneous expression: monomials of degree " +
                        std::to_string(a.degree()) + " and " +
                        std::to_string(b.degree()));
    return a.add(b);
  }

  HomPolynomial parse_term() {
    HomPolynomial value = parse_factor();
    while (consume('*')) value = value.mul(parse_factor());
    return value;
  }

  HomPolynomial parse_factor() {
    if (consume('-')) return parse_factor().scale(-1);
    return parse_power();
  }

  HomPolynomial parse_power() {
    HomPolynomial base = parse_atom();
    if (consume('^')) {
      skip_ws();
      if (pos < text.size() && text[pos] == '-') fail("exponent must be nonnegative");
      Int e = read_integer();
      if (e > 64) fail("exponent too large");
      base = base.pow(static_cast<int>(e));
      if (peek() == '^') fail("chained exponentiation is not allowed");
    }
    return base;
  }

  HomPolynomial parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    const char c = text[pos];
    if (c == '(') {
      ++pos;
      HomPolynomial inner = parse_expr();
      if (!consume(')')) fail("expected ')'");
      check_adjacent();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = read_integer();
      Rational value(num);
      skip_ws();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        Int den = read_integer();
        if (den == 0) fail("zero denominator");
        value = Rational(num, den);
      }
      check_adjacent();
      return HomPolynomial::constant(nvars, value);
    }
    if (c == 'z') {
      std::size_t var_pos = pos;
      ++pos;
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        fail("expected variable index after 'z'");
      Int idx = read_integer();
      if (idx >= nvars) {
        pos = var_pos;
        fail("unknown variable z" + idx.str() + " (variables are z0..z" +
             std::to_string(nvars - 1) + ")");
      }
      check_adjacent();
      return HomPolynomial::variable(nvars, static_cast<int>(idx));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  // rejects implicit multiplication such as "2z0" or "z0 z1" or "2(...)"
  void check_adjacent() {
    std::size_t save = pos;
    skip_ws();
    if (pos < text.size()) {
      const char c = text[pos];
      if (c == 'z' || c == '(' || std::isdigit(static_cast<unsigned char>(c)))
        fail("implicit multiplication is not allowed (use '*')");
    }
    pos = save;
  }
};

} // namespace

HomPolynomial parse_polynomial(std::string_view text, int nvars) {
  if (nvars < 1) throw DomainError("parse_polynomial: nvars must be positive");
  Parser p{text, nvars};
  HomPolynomial value = p.parse_expr();
  if (!p.eof()) p.fail("trailing input");
  return value;
}

} // namespace cubicsym
