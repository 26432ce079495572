#include <doctest.h>

#include "cubicsym/errors.hpp"
#include "cubicsym/parser.hpp"

using namespace cubicsym;

TEST_CASE("grammar fixtures") {
  CHECK(parse_polynomial("z0*z1*(z0+z1)", 3) ==
        parse_polynomial("z0^2*z1 + z0*z1^2", 3));
  CHECK(parse_polynomial("z0^3 + z1^3 + z2^3", 3).term_count() == 3);
  CHECK(parse_polynomial("(z0 + z1)^3", 3).term_count() == 4);
  CHECK(parse_polynomial("0", 3).is_zero());
  CHECK(parse_polynomial("z0^3 - z0^3", 3).is_zero());
  CHECK(parse_polynomial("1/2*z0 + 1/2*z0", 2) == parse_polynomial("z0", 2));
  CHECK(parse_polynomial("  z0 ^ 2 * z1 ", 3) == parse_polynomial("z0^2*z1", 3));
  CHECK(parse_polynomial("z0^0", 3) == HomPolynomial::constant(3, 1));
}

TEST_CASE("precedence") {
  // ^ binds tighter than unary minus: -z0^2 is -(z0^2)
  CHECK(parse_polynomial("-z0^2", 3) == parse_polynomial("z0^2", 3).scale(-1));
  // unary minus binds tighter than *: -z0*z1 is (-z0)*z1
  CHECK(parse_polynomial("-z0*z1", 3) == parse_polynomial("z0*z1", 3).scale(-1));
  CHECK(parse_polynomial("z0*z1 - z1*z2 + 2*z0*z1", 3) ==
        parse_polynomial("3*z0*z1 - z1*z2", 3));
  CHECK(parse_polynomial("2^3*z0^3", 3) == parse_polynomial("8*z0^3", 3));
}

TEST_CASE("non-homogeneous input is rejected naming both degrees") {
  try {
    parse_polynomial("z0 + z1^2", 3);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("1") != std::string::npos);
    CHECK(msg.find("2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_polynomial("z0*z1 + z2", 3), DomainError);
  CHECK_THROWS_AS(parse_polynomial("(z0 + 1)*z1", 3), DomainError);
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_polynomial("z0 + + z1", 3);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(parse_polynomial("", 3), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(z0 + z1", 3), ParseError);
  CHECK_THROWS_AS(parse_polynomial("z0 +", 3), ParseError);
  CHECK_THROWS_AS(parse_polynomial("z0^", 3), ParseError);
  CHECK_THROWS_AS(parse_polynomial("z0^-1", 3), ParseError);
  CHECK_THROWS_AS(parse_polynomial("z0^2^3", 3), ParseError);
  CHECK_THROWS_AS(parse_polynomial("z0 ? z1", 3), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1/0", 3), ParseError);
}

TEST_CASE("unknown variables") {
  CHECK_THROWS_AS(parse_polynomial("z3", 3), ParseError);
  CHECK_THROWS_AS(parse_polynomial("z0 + w", 3), ParseError);
  CHECK_NOTHROW(parse_polynomial("z2", 3));
  CHECK_THROWS_AS(parse_polynomial("z2", 2), ParseError);
}

TEST_CASE("implicit multiplication is rejected") {
  CHECK_THROWS_AS(parse_polynomial("2z0", 3), ParseError);
  CHECK_THROWS_AS(parse_polynomial("z0 z1", 3), ParseError);
  CHECK_THROWS_AS(parse_polynomial("2(z0 + z1)", 3), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(z0)(z1)", 3), ParseError);
}
