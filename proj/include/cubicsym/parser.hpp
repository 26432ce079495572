#ifndef CUBICSYM_PARSER_HPP
#define CUBICSYM_PARSER_HPP

#include <string_view>

#include "cubicsym/polynomial.hpp"

namespace cubicsym {

/// Parses a polynomial expression in variables z0..z{nvars-1} over Q and
/// returns the expanded homogeneous polynomial.
///
/// Grammar (precedence ^ > unary - > * > binary + -):
///   expr    := term (('+' | '-') term)*
///   term    := factor ('*' factor)*
///   factor  := '-' factor | power
///   power   := atom ('^' nonnegative-integer)?
///   atom    := rational-literal | variable | '(' expr ')'
/// Rational literals are INT or INT/INT; '/' has no other meaning.
/// Implicit multiplication is rejected.
///
/// Throws ParseError (with position) for syntax and unknown-variable
/// errors, and DomainError naming the two offending degrees when the
/// expression is not homogeneous.
HomPolynomial parse_polynomial(std::string_view text, int nvars);

} // namespace cubicsym

#endif
