#include <doctest.h>

#include "cubicsym/action.hpp"
#include "cubicsym/errors.hpp"
#include "cubicsym/parser.hpp"
#include "test_helpers.hpp"

using namespace cubicsym;
using testutil::act_via_matrix;
using testutil::conjugate_basis;
using testutil::diag3;
using testutil::Rng;
using testutil::unit;

namespace {

HomPolynomial p3(const char* text) { return parse_polynomial(text, 3); }

} // namespace

TEST_CASE("sl_basis") {
  const auto b2 = sl_basis(2);
  REQUIRE(b2.size() == 3);
  CHECK(b2[0].matrix == unit(2, 0, 1));
  CHECK(b2[1].matrix == unit(2, 1, 0));
  QMatrix h(2, 2);
  h.at(0, 0) = 1;
  h.at(1, 1) = -1;
  CHECK(b2[2].matrix == h);

  const auto b3 = sl_basis(3);
  REQUIRE(b3.size() == 8);
  CHECK(b3[0].matrix == unit(3, 0, 1));
  CHECK(b3[5].matrix == unit(3, 2, 1));
  CHECK(b3[6].matrix == diag3(1, -1, 0));
  CHECK(b3[7].matrix == diag3(0, 1, -1));
  for (const auto& e : b3) CHECK(e.matrix.trace() == 0);
  CHECK_THROWS_AS(SlElement(diag3(1, 0, 0)), DomainError);
}

TEST_CASE("act fixtures") {
  // diagonal matrices act by (negated) monomial weights
  CHECK(act(diag3(1, -2, 1), p3("z0^2*z1")) == p3("z0^2*z1").scale(0));
  CHECK(act(diag3(-2, 1, 1), p3("z0*z1^2")).is_zero());
  CHECK(act(diag3(2, 3, 0), p3("-z0^3 + z1^2*z2")) ==
        p3("-z0^3 + z1^2*z2").scale(-6));
  // E20 pulls back along the field z0 d/dz2
  CHECK(act(unit(3, 2, 0), p3("z0^3")).is_zero());
  CHECK(act(unit(3, 2, 0), p3("z0^2*z2")) == p3("-z0^3"));
  CHECK(act(QMatrix(3, 3), p3("z0^3")).is_zero());
}

TEST_CASE("act agrees with the action-matrix route on random input") {
  Rng rng(2211);
  for (int iter = 0; iter < 200; ++iter) {
    const QMatrix a = rng.traceless3();
    const HomPolynomial f = rng.homogeneous(3, 1 + iter % 4);
    CHECK(act(a, f) == act_via_matrix(a, f));
  }
}

TEST_CASE("act is a Lie algebra homomorphism") {
  Rng rng(2212);
  for (int iter = 0; iter < 200; ++iter) {
    const QMatrix a = rng.traceless3();
    const QMatrix b = rng.traceless3();
    const HomPolynomial f = rng.homogeneous(3, 3);
    const HomPolynomial lhs = act(bracket(a, b), f);
    const HomPolynomial rhs = act(a, act(b, f)).sub(act(b, act(a, f)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("action_matrix fixtures") {
  CHECK(rank(action_matrix(p3("z0^3"))) == 3);    // kernel dimension 5
  CHECK(rank(action_matrix(p3("z0*z1*z2"))) == 6); // kernel = diagonal torus
  CHECK(action_matrix(HomPolynomial(3, 3)).is_zero());
  const QMatrix m = action_matrix(p3("z0^3"));
  CHECK(m.rows() == 10);
  CHECK(m.cols() == 8);
}

namespace {

struct KernelFixture {
  const char* f;
  std::size_t strict_dim;
  std::size_t divisor_dim;
};

// dimensions frozen from the independent brute-force kernel oracle
constexpr KernelFixture kKernelFixtures[] = {
    {"z0^3 + z1^3 + z2^3", 0, 0},
    {"-z0^3 - z0^2*z2 + z1^2*z2", 0, 0},
    {"-z0^3 + z1^2*z2", 0, 1},
    {"z2*(z0^2 + z1^2 - z2^2)", 1, 1},
    {"(z1 - z2)*(z0^2 + z1^2 - z2^2)", 1, 2},
    {"z0*z1*z2", 2, 2},
    {"z0*z1*(z0 + z1)", 2, 3},
    {"z0^2*z1", 3, 4},
    {"z0^3", 5, 6},
};

} // namespace

TEST_CASE("annihilator dimensions across the normal forms") {
  for (const auto& fixture : kKernelFixtures) {
    CAPTURE(fixture.f);
    const HomPolynomial f = p3(fixture.f);
    const Annihilator strict = annihilator(f, ActionMode::Strict);
    const Annihilator divisor = annihilator(f, ActionMode::Divisor);
    CHECK(strict.algebra.dim() == fixture.strict_dim);
    CHECK(divisor.algebra.dim() == fixture.divisor_dim);
    // the kernel dimension agrees with the rank route
    CHECK(strict.algebra.dim() == 8 - rank(action_matrix(f)));
  }
}

TEST_CASE("displayed generator patterns of the three obstructed figures") {
  SUBCASE("three concurrent lines: bottom-row pattern, dimension 2") {
    const auto strict = annihilator(p3("z0*z1*(z0+z1)"), ActionMode::Strict);
    const auto expected =
        LieSubalgebra::from_basis(3, {unit(3, 2, 0), unit(3, 2, 1)});
    CHECK(strict.algebra.same_subspace(expected));
  }
  SUBCASE("double line plus line: diag(-2,1,1) and bottom row") {
    const auto strict = annihilator(p3("z0*z1^2"), ActionMode::Strict);
    const auto expected = LieSubalgebra::from_basis(
        3, {diag3(-2, 1, 1), unit(3, 2, 0), unit(3, 2, 1)});
    CHECK(strict.algebra.dim() == 3);
    CHECK(strict.algebra.same_subspace(expected));
  }
  SUBCASE("triple line: vanishing first row") {
    const auto strict = annihilator(p3("z0^3"), ActionMode::Strict);
    CHECK(strict.algebra.dim() == 5);
    for (const auto& b : strict.algebra.basis())
      for (std::size_t j = 0; j < 3; ++j) CHECK(b.at(0, j) == 0);
    const auto expected = LieSubalgebra::from_basis(
        3, {unit(3, 1, 0), unit(3, 1, 2), unit(3, 2, 0), unit(3, 2, 1),
            diag3(0, 1, -1)});
    CHECK(strict.algebra.same_subspace(expected));
  }
  SUBCASE("concurrent lines, divisor mode: adds diag(1,1,-2) with lambda 3") {
    const auto divisor = annihilator(p3("z0*z1*(z0+z1)"), ActionMode::Divisor);
    const auto expected = LieSubalgebra::from_basis(
        3, {diag3(1, 1, -2), unit(3, 2, 0), unit(3, 2, 1)});
    CHECK(divisor.algebra.same_subspace(expected));
    bool found_weight = false;
    for (std::size_t k = 0; k < divisor.algebra.dim(); ++k) {
      if (divisor.lambdas[k] == 0) continue;
      found_weight = true;
      CHECK(act(divisor.algebra.basis()[k], p3("z0*z1*(z0+z1)")) ==
            p3("z0*z1*(z0+z1)").scale(divisor.lambdas[k]));
    }
    CHECK(found_weight);
  }
}

TEST_CASE("fermat cubic and three general lines") {
  CHECK(annihilator(p3("z0^3 + z1^3 + z2^3"), ActionMode::Strict).algebra.dim() == 0);
  const auto torus = annihilator(p3("z0*z1*z2"), ActionMode::Strict);
  const auto expected =
      LieSubalgebra::from_basis(3, {diag3(1, -1, 0), diag3(0, 1, -1)});
  CHECK(torus.algebra.same_subspace(expected));
}

TEST_CASE("annihilator outputs are closed and certified") {
  Rng rng(2213);
  for (int iter = 0; iter < 10; ++iter) {
    const HomPolynomial f = rng.cubic3();
    for (const ActionMode mode : {ActionMode::Strict, ActionMode::Divisor}) {
      const auto ann = annihilator(f, mode);
      CHECK(verify_closure(ann.algebra).closed);
      for (std::size_t k = 0; k < ann.algebra.dim(); ++k)
        CHECK(act(ann.algebra.basis()[k], f) == f.scale(ann.lambdas[k]));
    }
  }
}

TEST_CASE("strict kernel is contained in the divisor kernel") {
  Rng rng(2214);
  for (int iter = 0; iter < 15; ++iter) {
    const HomPolynomial f = rng.cubic3();
    const auto strict = annihilator(f, ActionMode::Strict);
    const auto divisor = annihilator(f, ActionMode::Divisor);
    for (const auto& b : strict.algebra.basis())
      CHECK(divisor.algebra.contains(b));
  }
}

TEST_CASE("annihilator is invariant under scaling the cubic") {
  Rng rng(2215);
  for (int iter = 0; iter < 10; ++iter) {
    const HomPolynomial f = rng.cubic3();
    Rational c = rng.rational();
    if (c == 0) c = Rational(7, 2);
    for (const ActionMode mode : {ActionMode::Strict, ActionMode::Divisor}) {
      const auto a = annihilator(f, mode);
      const auto b = annihilator(f.scale(c), mode);
      CHECK(a.algebra.same_subspace(b.algebra));
    }
  }
}

TEST_CASE("equivariance: kernel of f(gz) is the g-conjugate of the kernel") {
  Rng rng(2216);
  const char* forms[] = {"z0^3", "z0^2*z1", "z0*z1*(z0+z1)", "z0*z1*z2",
                         "z2*(z0^2 + z1^2 - z2^2)"};
  for (const char* text : forms) {
    const HomPolynomial f = p3(text);
    for (int iter = 0; iter < 4; ++iter) {
      const ProjectiveTransform g = rng.invertible3();
      for (const ActionMode mode : {ActionMode::Strict, ActionMode::Divisor}) {
        const auto transformed = annihilator(apply_transform(f, g), mode);
        const auto original = annihilator(f, mode);
        const auto conjugated = LieSubalgebra::span(
            3, conjugate_basis(original.algebra.basis(), g.matrix()));
        CHECK(transformed.algebra.same_subspace(conjugated));
      }
    }
  }
}

TEST_CASE("type number fixtures") {
  const HomPolynomial f = p3("z0^3");
  CHECK(type_number(f, {0, 1, 0}) == 2);
  CHECK(type_number(f, {1, 0, 0}) == 0); // f(1,0,0) = 1: off the curve z0 = 0
  CHECK(type_number(f, {1, 1, 1}) == 0);
  CHECK(type_number(f, {0, Rational(1, 2), 3}) == 2);
  CHECK_THROWS_AS(type_number(f, {0, 0, 0}), DomainError);
  CHECK_THROWS_AS(type_number(parse_polynomial("z0^2", 3), {1, 0, 0}), DomainError);
}
