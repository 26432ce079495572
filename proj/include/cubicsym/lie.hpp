#ifndef CUBICSYM_LIE_HPP
#define CUBICSYM_LIE_HPP

#include <optional>
#include <vector>

#include "cubicsym/matrix.hpp"

namespace cubicsym {

/// Matrix commutator AB - BA.
QMatrix bracket(const QMatrix& a, const QMatrix& b);

struct ClosureWitness {
  std::size_t i, j;  // offending basis pair
  QMatrix residual;  // component of [b_i, b_j] outside the span
};

/// A Lie subalgebra of ambient x ambient matrices, given by a linearly
/// independent basis. Structure constants (and the bracket-closure check
/// they depend on) are computed eagerly at construction, so instances are
/// immutable values and safe to share across threads.
class LieSubalgebra {
public:
  /// Wraps the given basis as-is; throws DomainError if it is linearly
  /// dependent or the sizes are inconsistent.
  static LieSubalgebra from_basis(std::size_t ambient, std::vector<QMatrix> basis);

  /// Canonical subalgebra spanned by arbitrary generators: the basis is
  /// the nonzero rows of the rref of the flattened generators, so equal
  /// spans always produce identical objects.
  static LieSubalgebra span(std::size_t ambient, const std::vector<QMatrix>& generators);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<QMatrix>& basis() const { return basis_; }

  bool is_closed() const { return closed_; }
  const std::optional<ClosureWitness>& closure_witness() const { return witness_; }

  /// c[i][j][k] with [b_i, b_j] = sum_k c[i][j][k] b_k; requires closure.
  const Rational& structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
  const std::vector<Rational>& bracket_coords(std::size_t i, std::size_t j) const;

  bool contains(const QMatrix& m) const;
  bool same_subspace(const LieSubalgebra& other) const;

private:
  LieSubalgebra(std::size_t ambient, std::vector<QMatrix> basis);

  std::size_t ambient_;
  std::vector<QMatrix> basis_;
  bool closed_ = true;
  std::optional<ClosureWitness> witness_;
  // coords_[i * dim + j] = coordinates of [b_i, b_j]; empty if not closed
  std::vector<std::vector<Rational>> coords_;
};

struct ClosureCheck {
  bool closed;
  std::optional<ClosureWitness> witness;
};
ClosureCheck verify_closure(const LieSubalgebra& g);

/// {x in g : [x, b_j] = 0 for all j}, via the nullspace of the structure
/// constants. Requires closure.
LieSubalgebra center(const LieSubalgebra& g);

/// g, [g,g], [[g,g],[g,g]], ... until the dimension stabilizes; the final
/// term is included (so an abelian g yields [g, 0]).
std::vector<LieSubalgebra> derived_series(const LieSubalgebra& g);

/// g, [g,g], [g,[g,g]], ... until the dimension stabilizes.
std::vector<LieSubalgebra> lower_central_series(const LieSubalgebra& g);

bool is_abelian(const LieSubalgebra& g);
bool is_solvable(const LieSubalgebra& g);
bool is_nilpotent(const LieSubalgebra& g);

/// K[i][j] = trace(ad b_i . ad b_j) in the adjoint representation of g on
/// itself (not the ambient trace form). Requires closure.
QMatrix killing_form(const LieSubalgebra& g);

/// The solvable radical, computed as the Killing-orthogonal complement of
/// the derived algebra (characteristic zero). The result is certified at
/// runtime: it must be an ideal, it must be solvable, and the quotient's
/// Killing form must be nondegenerate; any failed certificate throws
/// InternalError since it indicates a closure or independence bug upstream.
LieSubalgebra radical(const LieSubalgebra& g);

struct ReductivityVerdict {
  bool reductive; // radical == center
  LieSubalgebra radical;
  LieSubalgebra center;
};
ReductivityVerdict is_reductive(const LieSubalgebra& g);

} // namespace cubicsym

#endif
