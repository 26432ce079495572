#ifndef CUBICSYM_ACTION_HPP
#define CUBICSYM_ACTION_HPP

#include <array>
#include <vector>

#include "cubicsym/lie.hpp"
#include "cubicsym/polynomial.hpp"

namespace cubicsym {

/// Which invariance condition cuts out the symmetry algebra of a cubic:
/// Strict requires the vector field to annihilate the defining polynomial
/// (V_a f = 0); Divisor only requires it to preserve the zero divisor
/// (V_a f = lambda f for some scalar lambda).
enum class ActionMode { Strict, Divisor };

const char* to_string(ActionMode mode);

/// Traceless n x n matrix.
struct SlElement {
  QMatrix matrix;
  explicit SlElement(QMatrix m);
};

/// Canonical basis of sl(n): off-diagonal units E_ij (i != j) in row-major
/// order, then the diagonal differences E_ii - E_{i+1,i+1}. Size n^2 - 1.
std::vector<SlElement> sl_basis(std::size_t n);

/// Action of a matrix on a homogeneous polynomial, induced by pulling
/// functions back along the flow of the linear field:
///   act(a, f) = d/dt f(e^{-t a} z) |_{t=0} = - sum_i (a z)_i df/dz_i
/// (the matrix acts on the coordinate column). The minus sign makes
/// a -> act(a, .) a Lie algebra homomorphism; the kernel is the same as
/// for the raw derivation (a z) . grad, so the displayed generator
/// patterns pinned in the fixtures are unaffected. The transpose
/// convention would yield transposed kernels instead.
HomPolynomial act(const QMatrix& a, const HomPolynomial& f);

/// Matrix of a |-> act(a, f) over the canonical sl(n) basis: rows indexed
/// by the degree-d monomials in graded-lex order, one column per basis
/// element. Size (dim S^d) x (n^2 - 1).
QMatrix action_matrix(const HomPolynomial& f);

/// The symmetry algebra of f in the requested mode, with its canonical
/// nullspace basis. For Divisor mode, lambdas[k] is the eigenvalue with
/// act(basis[k], f) = lambdas[k] * f; for Strict mode all lambdas are zero.
///
/// For a in sl(n) the Euler term of the anticanonical twist is the trace,
/// which vanishes, so strict invariance of the Poisson section is exactly
/// V_a f = 0.
struct Annihilator {
  ActionMode mode;
  LieSubalgebra algebra;
  std::vector<Rational> lambdas;
};
Annihilator annihilator(const HomPolynomial& f, ActionMode mode);

/// Pointwise type number of the deformed structure on a complex surface:
/// 2 where the defining cubic vanishes (the bivector drops rank), 0 at
/// generic points. The point is projective and must be nonzero.
int type_number(const HomPolynomial& f, const std::array<Rational, 3>& point);

} // namespace cubicsym

#endif
