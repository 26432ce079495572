#ifndef CUBICSYM_UPOLY_HPP
#define CUBICSYM_UPOLY_HPP

// Internal helpers: dense univariate and bivariate polynomials over Q,
// quotient rings Q[x]/(m) with dynamic splitting, and exact counting of
// the distinct algebraic zeros of small bivariate systems. Not installed.

#include <optional>
#include <utility>
#include <vector>

#include "cubicsym/rational.hpp"

namespace cubicsym::detail {

/// Dense univariate polynomial over Q; coeffs[i] is the coefficient of x^i.
/// Invariant: empty, or the last coefficient is nonzero.
struct UPoly {
  std::vector<Rational> coeffs;

  static UPoly zero() { return {}; }
  static UPoly constant(const Rational& c);
  static UPoly linear(const Rational& c0, const Rational& c1); // c0 + c1 x

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const Rational& lc() const { return coeffs.back(); }
  bool is_constant() const { return coeffs.size() <= 1; }

  void normalize();
  Rational eval(const Rational& x) const;

  friend bool operator==(const UPoly&, const UPoly&) = default;
};

UPoly u_add(const UPoly& a, const UPoly& b);
UPoly u_sub(const UPoly& a, const UPoly& b);
UPoly u_mul(const UPoly& a, const UPoly& b);
UPoly u_scale(const UPoly& a, const Rational& c);
UPoly u_derivative(const UPoly& a);
UPoly u_monic(const UPoly& a);

/// Field division with remainder: a = q b + r, deg r < deg b.
std::pair<UPoly, UPoly> u_divmod(const UPoly& a, const UPoly& b);
/// Exact division; throws InternalError on a nonzero remainder.
UPoly u_div_exact(const UPoly& a, const UPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UPoly u_gcd(UPoly a, UPoly b);
/// Extended gcd: returns (g, s, t) with s a + t b = g, g monic (or zero).
std::tuple<UPoly, UPoly, UPoly> u_gcd_ext(const UPoly& a, const UPoly& b);
/// p / gcd(p, p'), monic: same roots, all simple.
UPoly u_squarefree_part(const UPoly& p);

/// All rational roots, exactly (divisor enumeration on the cleared-denominator
/// form for degree >= 3, discriminant square test for quadratics).
std::vector<Rational> u_rational_roots(const UPoly& p);

/// Bivariate polynomial as a dense vector over y with UPoly (in x)
/// coefficients. Invariant: empty or last coefficient nonzero.
struct BPoly {
  std::vector<UPoly> coeffs;

  static BPoly zero() { return {}; }
  static BPoly from_upoly(const UPoly& u); // pure-x polynomial

  bool is_zero() const { return coeffs.empty(); }
  int degy() const { return static_cast<int>(coeffs.size()) - 1; }
  const UPoly& lcy() const { return coeffs.back(); }
  bool is_constant() const; // rational constant
  void normalize();

  friend bool operator==(const BPoly&, const BPoly&) = default;
};

BPoly b_add(const BPoly& a, const BPoly& b);
BPoly b_sub(const BPoly& a, const BPoly& b);
BPoly b_mul(const BPoly& a, const BPoly& b);
BPoly b_derivative_y(const BPoly& a);
UPoly b_eval_x(const BPoly& a, const Rational& x0); // specialize x, poly in y

/// gcd of the y-coefficients (monic).
UPoly b_content(const BPoly& a);
BPoly b_primitive(const BPoly& a);
/// gcd in Q[x][y] via primitive PRS. Defined up to normalization; the
/// result is primitive with monic content convention.
BPoly b_gcd(const BPoly& a, const BPoly& b);
/// Exact division; throws InternalError if not exact.
BPoly b_div_exact(const BPoly& a, const BPoly& b);

/// Res_y(a, b) with the formal y-degrees of a and b (Sylvester determinant,
/// entries in Q[x]). Zero iff a, b share a factor of positive y-degree.
UPoly b_resultant_y(const BPoly& a, const BPoly& b);

/// Thrown inside quotient-ring arithmetic when a zero divisor is met;
/// carries a proper monic factor of the modulus so the caller can split
/// the computation and rerun per component.
struct SplitDetected {
  UPoly factor;
};

/// Arithmetic in A = Q[x]/(m) for a monic squarefree modulus m, treated as
/// a field until proven otherwise (dynamic evaluation): inverting a zero
/// divisor raises SplitDetected instead of failing.
class QuotientRing {
public:
  explicit QuotientRing(UPoly modulus);
  const UPoly& modulus() const { return m_; }
  int degree() const { return m_.degree(); }

  UPoly reduce(const UPoly& a) const;
  UPoly add(const UPoly& a, const UPoly& b) const { return reduce(u_add(a, b)); }
  UPoly sub(const UPoly& a, const UPoly& b) const { return reduce(u_sub(a, b)); }
  UPoly mul(const UPoly& a, const UPoly& b) const { return reduce(u_mul(a, b)); }
  bool is_zero(const UPoly& a) const { return reduce(a).is_zero(); }
  /// Inverse of a unit; throws SplitDetected on a zero divisor.
  UPoly invert(const UPoly& a) const;

private:
  UPoly m_;
};

/// Polynomial in y with coefficients in a QuotientRing.
using APoly = std::vector<UPoly>;

APoly a_from_bpoly(const QuotientRing& ring, const BPoly& p);
APoly a_normalize(const QuotientRing& ring, APoly p);
int a_degy(const APoly& p);
APoly a_monic(const QuotientRing& ring, const APoly& p); // may throw SplitDetected
/// Remainder of a modulo the monic divisor b.
APoly a_mod(const QuotientRing& ring, APoly a, const APoly& b_monic);
APoly a_div_exact(const QuotientRing& ring, APoly a, const APoly& b_monic);
/// Monic gcd in A[y] (dynamic evaluation; may throw SplitDetected).
APoly a_gcd(const QuotientRing& ring, APoly a, APoly b);
APoly a_derivative_y(const QuotientRing& ring, const APoly& p);
/// Monic squarefree part.
APoly a_squarefree_part(const QuotientRing& ring, const APoly& p);

/// One solved component of a zero-dimensional bivariate system: over each
/// root alpha of the (squarefree, monic) modulus there are exactly
/// deg_y(fiber) distinct solutions, the roots of fiber(alpha, y).
struct SolvedComponent {
  UPoly modulus;  // monic, squarefree, degree >= 1
  APoly fiber;    // monic, squarefree in y over Q[x]/(modulus), deg_y >= 1
};

/// Exact analysis of the common zeros of a system of bivariate polynomials
/// over the algebraic closure. Requires the zero set to be finite; throws
/// InternalError when it provably is not.
struct AffineZeros {
  int count = 0;                         // distinct zeros over Qbar
  std::vector<SolvedComponent> components;
};
AffineZeros analyze_affine_system(std::vector<BPoly> system);

/// The rational members of the zero set of a finite system, exactly.
struct AffinePoint {
  Rational x, y;
  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};
std::vector<AffinePoint> rational_affine_zeros(const std::vector<BPoly>& system);

} // namespace cubicsym::detail

#endif
