#include "cubicsym/lie.hpp"

#include <algorithm>

#include "cubicsym/errors.hpp"

namespace cubicsym {

QMatrix bracket(const QMatrix& a, const QMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw DomainError("bracket: matrices must be square of equal size");
  return a * b - b * a;
}

namespace {

QMatrix stack_flattened(const std::vector<QMatrix>& mats, std::size_t ambient) {
  QMatrix s(mats.size(), ambient * ambient);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const auto flat = mats[i].flatten();
    for (std::size_t j = 0; j < flat.size(); ++j) s.at(i, j) = flat[j];
  }
  return s;
}

QMatrix unflatten(const std::vector<Rational>& v, std::size_t ambient) {
  QMatrix m(ambient, ambient);
  for (std::size_t i = 0; i < ambient; ++i)
    for (std::size_t j = 0; j < ambient; ++j) m.at(i, j) = v[i * ambient + j];
  return m;
}

// canonical representative of v modulo the row space of the rref
std::vector<Rational> reduce_mod_rowspace(const RrefResult& r,
                                          std::vector<Rational> v) {
  for (std::size_t k = 0; k < r.pivot_columns.size(); ++k) {
    const Rational factor = v[r.pivot_columns[k]];
    if (factor == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      v[j] -= factor * r.matrix.at(k, j);
  }
  return v;
}

std::vector<QMatrix> combine(const std::vector<QMatrix>& basis,
                             const std::vector<std::vector<Rational>>& coord_vectors,
                             std::size_t ambient) {
  std::vector<QMatrix> out;
  out.reserve(coord_vectors.size());
  for (const auto& v : coord_vectors) {
    QMatrix m(ambient, ambient);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (v[i] != 0) m = m + basis[i] * v[i];
    out.push_back(std::move(m));
  }
  return out;
}

} // namespace

LieSubalgebra::LieSubalgebra(std::size_t ambient, std::vector<QMatrix> basis)
    : ambient_(ambient), basis_(std::move(basis)) {
  for (const auto& b : basis_)
    if (b.rows() != ambient_ || b.cols() != ambient_)
      throw DomainError("LieSubalgebra: basis matrix size differs from ambient");
  const QMatrix stacked = stack_flattened(basis_, ambient_);
  const RrefResult reduced = rref(stacked);
  if (reduced.pivot_columns.size() != basis_.size())
    throw DomainError("LieSubalgebra: basis is linearly dependent");

  const std::size_t d = basis_.size();
  const QMatrix coord_system = stacked.transpose(); // columns are basis vectors
  coords_.assign(d * d, {});
  for (std::size_t i = 0; i < d && closed_; ++i) {
    coords_[i * d + i].assign(d, Rational(0));
    for (std::size_t j = i + 1; j < d; ++j) {
      const QMatrix br = bracket(basis_[i], basis_[j]);
      const auto x = solve(coord_system, br.flatten());
      if (!x) {
        closed_ = false;
        witness_ = ClosureWitness{
            i, j, unflatten(reduce_mod_rowspace(reduced, br.flatten()), ambient_)};
        coords_.clear();
        break;
      }
      coords_[i * d + j] = *x;
      std::vector<Rational> neg(d);
      for (std::size_t k = 0; k < d; ++k) neg[k] = -(*x)[k];
      coords_[j * d + i] = std::move(neg);
    }
  }
}

LieSubalgebra LieSubalgebra::from_basis(std::size_t ambient, std::vector<QMatrix> basis) {
  return LieSubalgebra(ambient, std::move(basis));
}

LieSubalgebra LieSubalgebra::span(std::size_t ambient,
                                  const std::vector<QMatrix>& generators) {
  for (const auto& g : generators)
    if (g.rows() != ambient || g.cols() != ambient)
      throw DomainError("LieSubalgebra::span: generator size differs from ambient");
  const RrefResult reduced = rref(stack_flattened(generators, ambient));
  std::vector<QMatrix> basis;
  for (std::size_t k = 0; k < reduced.pivot_columns.size(); ++k) {
    std::vector<Rational> row(ambient * ambient);
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = reduced.matrix.at(k, j);
    basis.push_back(unflatten(row, ambient));
  }
  return LieSubalgebra(ambient, std::move(basis));
}

const std::vector<Rational>& LieSubalgebra::bracket_coords(std::size_t i,
                                                           std::size_t j) const {
  if (!closed_)
    throw DomainError("LieSubalgebra: structure constants require a closed algebra");
  return coords_[i * dim() + j];
}

const Rational& LieSubalgebra::structure_constant(std::size_t i, std::size_t j,
                                                  std::size_t k) const {
  return bracket_coords(i, j)[k];
}

bool LieSubalgebra::contains(const QMatrix& m) const {
  if (m.rows() != ambient_ || m.cols() != ambient_) return false;
  QMatrix stacked(basis_.size() + 1, ambient_ * ambient_);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto flat = basis_[i].flatten();
    for (std::size_t j = 0; j < flat.size(); ++j) stacked.at(i, j) = flat[j];
  }
  const auto flat = m.flatten();
  for (std::size_t j = 0; j < flat.size(); ++j) stacked.at(basis_.size(), j) = flat[j];
  return rank(stacked) == basis_.size();
}

bool LieSubalgebra::same_subspace(const LieSubalgebra& other) const {
  if (ambient_ != other.ambient_ || dim() != other.dim()) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const QMatrix& m) { return contains(m); });
}

ClosureCheck verify_closure(const LieSubalgebra& g) {
  return {g.is_closed(), g.closure_witness()};
}

namespace {

void require_closed(const LieSubalgebra& g, const char* op) {
  if (!g.is_closed())
    throw DomainError(std::string(op) + ": algebra is not bracket-closed");
}

} // namespace

LieSubalgebra center(const LieSubalgebra& g) {
  require_closed(g, "center");
  const std::size_t d = g.dim();
  if (d == 0) return g;
  // sum_i x_i c[i][j][k] = 0 for all j, k
  QMatrix m(d * d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < d; ++i)
        m.at(j * d + k, i) = g.structure_constant(i, j, k);
  const auto kernel = nullspace(m);
  std::vector<QMatrix> mats;
  for (const auto& v : kernel) {
    QMatrix x(g.ambient(), g.ambient());
    for (std::size_t i = 0; i < d; ++i)
      if (v[i] != 0) x = x + g.basis()[i] * v[i];
    mats.push_back(std::move(x));
  }
  return LieSubalgebra::from_basis(g.ambient(), std::move(mats));
}

namespace {

LieSubalgebra bracket_span(const LieSubalgebra& a, const LieSubalgebra& b) {
  std::vector<QMatrix> gens;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) gens.push_back(bracket(x, y));
  return LieSubalgebra::span(a.ambient(), gens);
}

std::vector<LieSubalgebra> series(const LieSubalgebra& g, bool lower_central) {
  require_closed(g, lower_central ? "lower_central_series" : "derived_series");
  std::vector<LieSubalgebra> terms{g};
  while (terms.back().dim() > 0) {
    const LieSubalgebra& cur = terms.back();
    LieSubalgebra next = lower_central ? bracket_span(g, cur) : bracket_span(cur, cur);
    if (next.dim() == cur.dim()) break; // stabilized above zero
    terms.push_back(std::move(next));
  }
  return terms;
}

} // namespace

std::vector<LieSubalgebra> derived_series(const LieSubalgebra& g) {
  return series(g, false);
}

std::vector<LieSubalgebra> lower_central_series(const LieSubalgebra& g) {
  return series(g, true);
}

bool is_abelian(const LieSubalgebra& g) {
  require_closed(g, "is_abelian");
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      for (std::size_t k = 0; k < g.dim(); ++k)
        if (g.structure_constant(i, j, k) != 0) return false;
  return true;
}

bool is_solvable(const LieSubalgebra& g) {
  return derived_series(g).back().dim() == 0;
}

bool is_nilpotent(const LieSubalgebra& g) {
  return lower_central_series(g).back().dim() == 0;
}

QMatrix killing_form(const LieSubalgebra& g) {
  require_closed(g, "killing_form");
  const std::size_t d = g.dim();
  QMatrix k(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Rational sum = 0;
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
          sum += g.structure_constant(i, a, b) * g.structure_constant(j, b, a);
      k.at(i, j) = sum;
      k.at(j, i) = sum;
    }
  return k;
}

namespace {

// coordinates (in g's basis) of a canonical basis of [g, g]
RrefResult derived_coords(const LieSubalgebra& g) {
  const std::size_t d = g.dim();
  QMatrix rows(d * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        rows.at(i * d + j, k) = g.structure_constant(i, j, k);
  return rref(rows);
}

// Killing form of g / rad from quotient structure constants; rad is given
// by rref coordinate rows inside g
bool quotient_killing_nondegenerate(const LieSubalgebra& g, const RrefResult& rad) {
  const std::size_t d = g.dim();
  std::vector<bool> is_pivot(d, false);
  for (std::size_t p : rad.pivot_columns) is_pivot[p] = true;
  std::vector<std::size_t> complement;
  for (std::size_t j = 0; j < d; ++j)
    if (!is_pivot[j]) complement.push_back(j);
  const std::size_t q = complement.size();
  if (q == 0) return true; // zero quotient: vacuously semisimple

  auto project = [&](std::vector<Rational> v) {
    for (std::size_t k = 0; k < rad.pivot_columns.size(); ++k) {
      const Rational factor = v[rad.pivot_columns[k]];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < d; ++j) v[j] -= factor * rad.matrix.at(k, j);
    }
    std::vector<Rational> out(q);
    for (std::size_t a = 0; a < q; ++a) out[a] = v[complement[a]];
    return out;
  };

  // quotient structure constants cq[a][b] in the complement basis
  std::vector<std::vector<Rational>> cq(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      cq[a * q + b] = project(g.bracket_coords(complement[a], complement[b]));

  QMatrix k(q, q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      Rational sum = 0;
      for (std::size_t s = 0; s < q; ++s)
        for (std::size_t t = 0; t < q; ++t)
          sum += cq[a * q + s][t] * cq[b * q + t][s];
      k.at(a, b) = sum;
    }
  return rank(k) == q;
}

} // namespace

LieSubalgebra radical(const LieSubalgebra& g) {
  require_closed(g, "radical");
  const std::size_t d = g.dim();
  if (d == 0) return g;

  const RrefResult der = derived_coords(g);
  const QMatrix k = killing_form(g);

  // rad = {x : K(x, y) = 0 for all y in [g,g]}
  QMatrix constraints(der.pivot_columns.size(), d);
  for (std::size_t r = 0; r < der.pivot_columns.size(); ++r)
    for (std::size_t j = 0; j < d; ++j) {
      Rational sum = 0;
      for (std::size_t i = 0; i < d; ++i) sum += der.matrix.at(r, i) * k.at(i, j);
      constraints.at(r, j) = sum;
    }
  const auto kernel = nullspace(constraints);
  LieSubalgebra rad =
      LieSubalgebra::from_basis(g.ambient(), combine(g.basis(), kernel, g.ambient()));

  // certificate 1: rad is an ideal
  for (const auto& b : g.basis())
    for (const auto& r : rad.basis())
      if (!rad.contains(bracket(b, r)))
        throw InternalError("radical: computed subspace is not an ideal");
  // certificate 2: rad is solvable
  if (!is_solvable(rad))
    throw InternalError("radical: computed ideal is not solvable");
  // certificate 3: g / rad is semisimple (Cartan criterion)
  QMatrix coord_rows(kernel.size(), d);
  for (std::size_t i = 0; i < kernel.size(); ++i)
    for (std::size_t j = 0; j < d; ++j) coord_rows.at(i, j) = kernel[i][j];
  if (!quotient_killing_nondegenerate(g, rref(coord_rows)))
    throw InternalError("radical: quotient Killing form is degenerate");

  return rad;
}

ReductivityVerdict is_reductive(const LieSubalgebra& g) {
  require_closed(g, "is_reductive");
  LieSubalgebra rad = radical(g);
  LieSubalgebra cen = center(g);
  for (const auto& z : cen.basis())
    if (!rad.contains(z))
      throw InternalError("is_reductive: center not contained in radical");
  const bool reductive = rad.dim() == cen.dim();
  return {reductive, std::move(rad), std::move(cen)};
}

} // namespace cubicsym
