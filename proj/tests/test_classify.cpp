#include <doctest.h>

#include <map>

#include "cubicsym/action.hpp"
#include "cubicsym/classify.hpp"
#include "cubicsym/errors.hpp"
#include "cubicsym/parser.hpp"
#include "test_helpers.hpp"

using namespace cubicsym;
using testutil::Rng;

namespace {

HomPolynomial p3(const char* text) { return parse_polynomial(text, 3); }

} // namespace

TEST_CASE("the nine normal forms classify to their nine tags") {
  std::map<CurveType, int> seen;
  for (CurveType t : figure_order()) {
    const HomPolynomial f = normal_form(t);
    CHECK(classify(f) == t);
    ++seen[classify(f)];
  }
  CHECK(seen.size() == 9); // bijective on the corpus
}

TEST_CASE("classification fixtures") {
  CHECK(classify(p3("z0^3 + z1^3 + z2^3")) == CurveType::SmoothElliptic);
  CHECK(classify(p3("z1^2*z2 - z0^3 - z0^2*z2")) == CurveType::Nodal);
  CHECK(classify(p3("z1^2*z2 - z0^3")) == CurveType::Cuspidal);
  CHECK(classify(p3("z2*(z0^2 + z1^2 - z2^2)")) == CurveType::ConicLineGeneral);
  CHECK(classify(p3("(z1 - z2)*(z0^2 + z1^2 - z2^2)")) == CurveType::ConicLineTangent);
  CHECK(classify(p3("z0*z1*z2")) == CurveType::ThreeLinesGeneral);
  CHECK(classify(p3("z0*z1*(z0 + z1)")) == CurveType::ThreeLinesConcurrent);
  CHECK(classify(p3("z0^2*z1")) == CurveType::DoubleLinePlusLine);
  CHECK(classify(p3("z0^3")) == CurveType::TripleLine);
  // a conic with a secant line that meets it in two rational points
  CHECK(classify(p3("z1*(z0^2 + z1^2 - z2^2)")) == CurveType::ConicLineGeneral);
  // tangent configuration in another position
  CHECK(classify(p3("z2*(z0*z2 - z1^2)")) == CurveType::ConicLineTangent);
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS_AS(classify(HomPolynomial(3, 3)), DomainError);
  CHECK_THROWS_AS(classify(parse_polynomial("z0 + z1", 3)), DomainError);
  CHECK_THROWS_AS(classify(parse_polynomial("z0^4", 3)), DomainError);
  CHECK_THROWS_AS(singular_data(parse_polynomial("z0^2", 3)), DomainError);
}

TEST_CASE("singular_data fixtures") {
  SUBCASE("smooth fermat cubic") {
    const SingularData d = singular_data(p3("z0^3 + z1^3 + z2^3"));
    CHECK(d.reduced);
    CHECK(d.repeated_factor_degree == 0);
    CHECK(d.singular_count == 0);
    CHECK(d.rational_singular_points.empty());
  }
  SUBCASE("three concurrent lines meet at [0:0:1]") {
    const SingularData d = singular_data(p3("z0*z1*(z0+z1)"));
    CHECK(d.reduced);
    CHECK(d.singular_count == 1);
    REQUIRE(d.rational_singular_points.size() == 1);
    CHECK(d.rational_singular_points[0] ==
          canonical_point({Rational(0), Rational(0), Rational(1)}));
  }
  SUBCASE("double line is non-reduced") {
    const SingularData d = singular_data(p3("z0^2*z1"));
    CHECK_FALSE(d.reduced);
    CHECK(d.repeated_factor_degree == 1);
    CHECK_FALSE(d.singular_count.has_value());
  }
  SUBCASE("triple line") {
    const SingularData d = singular_data(p3("z0^3"));
    CHECK_FALSE(d.reduced);
    CHECK(d.repeated_factor_degree == 2);
  }
  SUBCASE("nodal cubic: one rational node") {
    const SingularData d = singular_data(p3("z1^2*z2 - z0^3 - z0^2*z2"));
    CHECK(d.reduced);
    CHECK(d.singular_count == 1);
    REQUIRE(d.rational_singular_points.size() == 1);
    CHECK(d.rational_singular_points[0] ==
          canonical_point({Rational(0), Rational(0), Rational(1)}));
  }
  SUBCASE("three general lines: three rational vertices") {
    const SingularData d = singular_data(p3("z0*z1*z2"));
    CHECK(d.singular_count == 3);
    CHECK(d.rational_singular_points.size() == 3);
  }
  SUBCASE("conic and secant: two conjugate singular points, none rational") {
    const SingularData d = singular_data(p3("z2*(z0^2 + z1^2 - z2^2)"));
    CHECK(d.singular_count == 2);
    CHECK(d.rational_singular_points.empty());
  }
  SUBCASE("conic and secant with rational intersections") {
    const SingularData d = singular_data(p3("z1*(z0^2 + z1^2 - z2^2)"));
    CHECK(d.singular_count == 2);
    CHECK(d.rational_singular_points.size() == 2);
  }
  SUBCASE("tangent point of the conic-line configuration") {
    const SingularData d = singular_data(p3("(z1 - z2)*(z0^2 + z1^2 - z2^2)"));
    CHECK(d.singular_count == 1);
    REQUIRE(d.rational_singular_points.size() == 1);
    CHECK(d.rational_singular_points[0] ==
          canonical_point({Rational(0), Rational(1), Rational(1)}));
  }
}

TEST_CASE("classification is invariant under scaling") {
  for (CurveType t : figure_order()) {
    const HomPolynomial f = normal_form(t);
    CHECK(classify(f.scale(Rational(-7, 3))) == t);
  }
}

TEST_CASE("classification is projectively invariant") {
  Rng rng(5150);
  for (CurveType t : figure_order()) {
    const HomPolynomial f = normal_form(t);
    for (int iter = 0; iter < 12; ++iter) {
      const ProjectiveTransform g = rng.invertible3();
      CAPTURE(to_string(t));
      CHECK(classify(apply_transform(f, g)) == t);
    }
  }
}

TEST_CASE("curve type names round-trip") {
  for (CurveType t : figure_order()) {
    const auto back = curve_type_from_string(to_string(t));
    REQUIRE(back.has_value());
    CHECK(*back == t);
  }
  CHECK_FALSE(curve_type_from_string("Quartic").has_value());
}

TEST_CASE("type/kernel-dimension consistency on the corpus") {
  // frozen from the brute-force kernel oracle
  const std::map<CurveType, std::size_t> expected{
      {CurveType::SmoothElliptic, 0},      {CurveType::Nodal, 0},
      {CurveType::Cuspidal, 0},            {CurveType::ConicLineGeneral, 1},
      {CurveType::ConicLineTangent, 1},    {CurveType::ThreeLinesGeneral, 2},
      {CurveType::ThreeLinesConcurrent, 2}, {CurveType::DoubleLinePlusLine, 3},
      {CurveType::TripleLine, 5},
  };
  for (const auto& [type, dim] : expected) {
    const HomPolynomial f = normal_form(type);
    CHECK(annihilator(f, ActionMode::Strict).algebra.dim() == dim);
  }
}

TEST_CASE("canonical_point normalization") {
  CHECK(canonical_point({Rational(1, 2), Rational(0), Rational(3, 2)}) ==
        canonical_point({Rational(-1), Rational(0), Rational(-3)}));
  const ProjectivePoint p = canonical_point({Rational(-2), Rational(4), Rational(0)});
  CHECK(p.coords[0] == 1);
  CHECK(p.coords[1] == -2);
  CHECK(p.coords[2] == 0);
  CHECK_THROWS_AS(canonical_point({Rational(0), Rational(0), Rational(0)}),
                  DomainError);
}
