#ifndef CUBICSYM_RATIONAL_HPP
#define CUBICSYM_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cubicsym {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored reduced with positive denominator;
/// cpp_rational maintains both invariants through every operation.
///
/// Everything in scope is a kernel of a matrix with rational entries, so a
/// Q-basis of such a kernel is also a C-basis and all dimensions over Q
/// equal the dimensions over C. Working over Q is therefore not an
/// approximation of the complex picture but an exact model of it.
using Rational = boost::multiprecision::cpp_rational;

/// Serializes as "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Parses "p", "-p", "p/q" (optional surrounding whitespace).
/// Throws ParseError on malformed text or zero denominator.
Rational rational_from_string(std::string_view text);

} // namespace cubicsym

#endif
