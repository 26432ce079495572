#ifndef CUBICSYM_POLYNOMIAL_HPP
#define CUBICSYM_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cubicsym/matrix.hpp"
#include "cubicsym/rational.hpp"

namespace cubicsym {

/// Exponent vector of a monomial in a fixed number of variables.
struct Monomial {
  std::vector<int> exp;

  int degree() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with z0 > z1 > z2 > ..., descending, so a
/// map ordered by this comparator iterates leading term first. This single
/// order is used everywhere (rendering, matrix assembly, normalization) so
/// that every output is byte-stable.
struct GradedLexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials of the given degree, leading first. Size C(degree+nvars-1, nvars-1).
std::vector<Monomial> monomial_basis(int nvars, int degree);

/// Sparse homogeneous polynomial over Q.
///
/// Invariants: every stored exponent vector sums to degree(), no stored
/// coefficient is zero, and the zero polynomial is the empty map (the
/// degree is still tracked).
class HomPolynomial {
public:
  using TermMap = std::map<Monomial, Rational, GradedLexDescending>;

  HomPolynomial() : nvars_(0), degree_(0) {}
  HomPolynomial(int nvars, int degree);

  static HomPolynomial constant(int nvars, const Rational& value);
  static HomPolynomial variable(int nvars, int index);
  static HomPolynomial from_terms(int nvars, int degree,
                                  const std::vector<std::pair<Monomial, Rational>>& terms);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rational coeff(const Monomial& m) const;
  /// Leading term in graded-lex order; polynomial must be nonzero.
  const std::pair<const Monomial, Rational>& leading() const;

  /// Addition of homogeneous polynomials of the same degree. A zero
  /// polynomial is degree-compatible with everything; for two nonzero
  /// operands of different degrees this throws DomainError naming both.
  HomPolynomial add(const HomPolynomial& other) const;
  HomPolynomial sub(const HomPolynomial& other) const;
  HomPolynomial scale(const Rational& c) const;
  HomPolynomial mul(const HomPolynomial& other) const;
  HomPolynomial pow(int e) const;

  /// Formal partial derivative; degree drops by one.
  HomPolynomial partial(int var) const;

  Rational evaluate(const std::vector<Rational>& point) const;

  /// Divide by the leading coefficient (monic in graded-lex); zero stays zero.
  HomPolynomial normalized_monic() const;

  /// Canonical text: terms in graded-lex order with explicit * and ^,
  /// e.g. "z0^2*z1 - 1/2*z1^3". Round-trips through parse_polynomial.
  std::string render() const;

  friend bool operator==(const HomPolynomial&, const HomPolynomial&) = default;

private:
  int nvars_;
  int degree_;
  TermMap terms_;

  void insert_term(const Monomial& m, const Rational& c);
  friend HomPolynomial apply_transform(const HomPolynomial&, const class ProjectiveTransform&);
};

/// Invertible linear change of coordinates on P^2 (or P^{n-1} generally).
class ProjectiveTransform {
public:
  explicit ProjectiveTransform(QMatrix m);
  const QMatrix& matrix() const { return matrix_; }
  ProjectiveTransform compose(const ProjectiveTransform& other) const;
  ProjectiveTransform inverted() const;

private:
  QMatrix matrix_;
};

/// f(g z): substitute each variable z_i by the linear form sum_j g[i][j] z_j.
HomPolynomial apply_transform(const HomPolynomial& f, const ProjectiveTransform& g);

/// GCD of two homogeneous polynomials over Q, normalized monic in graded-lex.
/// gcd(0, q) = monic q. Computed by stripping monomial content,
/// dehomogenizing, running a primitive-PRS bivariate gcd and rehomogenizing.
HomPolynomial poly_gcd(const HomPolynomial& p, const HomPolynomial& q);

/// GCD of the partial derivatives of f, monic. For a cubic this has
/// degree 2 exactly when f is a triple line, degree 1 exactly when f is a
/// double line times a different line, degree 0 when the curve is reduced.
HomPolynomial gcd_partials(const HomPolynomial& f);

/// Squarefree decomposition f = c * prod f_i^{m_i} with the f_i monic,
/// squarefree and pairwise coprime; the constant c makes the product
/// reconstruct f exactly. Factors ordered by increasing multiplicity.
struct SquarefreeDecomposition {
  Rational constant;
  std::vector<std::pair<HomPolynomial, int>> factors;
};
SquarefreeDecomposition factor_squarefree(const HomPolynomial& f);

/// Exact division; throws InternalError if g does not divide f.
HomPolynomial divide_exact(const HomPolynomial& f, const HomPolynomial& g);

} // namespace cubicsym

#endif
