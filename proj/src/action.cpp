#include "cubicsym/action.hpp"

#include "cubicsym/errors.hpp"

namespace cubicsym {

const char* to_string(ActionMode mode) {
  return mode == ActionMode::Strict ? "strict" : "divisor";
}

SlElement::SlElement(QMatrix m) : matrix(std::move(m)) {
  if (!matrix.is_square()) throw DomainError("SlElement: matrix must be square");
  if (matrix.trace() != 0) throw DomainError("SlElement: matrix must be traceless");
}

std::vector<SlElement> sl_basis(std::size_t n) {
  if (n < 2) throw DomainError("sl_basis: n must be at least 2");
  std::vector<SlElement> basis;
  basis.reserve(n * n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      QMatrix e(n, n);
      e.at(i, j) = 1;
      basis.emplace_back(std::move(e));
    }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    QMatrix h(n, n);
    h.at(i, i) = 1;
    h.at(i + 1, i + 1) = -1;
    basis.emplace_back(std::move(h));
  }
  return basis;
}

HomPolynomial act(const QMatrix& a, const HomPolynomial& f) {
  if (!a.is_square() || a.rows() != static_cast<std::size_t>(f.nvars()))
    throw DomainError("act: matrix size differs from the variable count");
  const int n = f.nvars();
  HomPolynomial result(n, f.degree());
  for (const auto& [m, c] : f.terms()) {
    for (int i = 0; i < n; ++i) {
      if (m.exp[i] == 0) continue;
      // -(a z)_i * d/dz_i applied to the monomial
      for (int j = 0; j < n; ++j) {
        const Rational& aij = a.at(i, j);
        if (aij == 0) continue;
        Monomial shifted = m;
        shifted.exp[i] -= 1;
        shifted.exp[j] += 1;
        result = result.add(HomPolynomial::from_terms(
            n, f.degree(), {{shifted, -c * m.exp[i] * aij}}));
      }
    }
  }
  return result;
}

QMatrix action_matrix(const HomPolynomial& f) {
  const std::size_t n = static_cast<std::size_t>(f.nvars());
  const auto basis = sl_basis(n);
  const auto monomials = monomial_basis(f.nvars(), f.degree());
  QMatrix m(monomials.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const HomPolynomial image = act(basis[col].matrix, f);
    for (std::size_t row = 0; row < monomials.size(); ++row)
      m.at(row, col) = image.coeff(monomials[row]);
  }
  return m;
}

Annihilator annihilator(const HomPolynomial& f, ActionMode mode) {
  if (f.is_zero()) throw DomainError("annihilator: zero polynomial");
  const std::size_t n = static_cast<std::size_t>(f.nvars());
  if (n < 2) throw DomainError("annihilator: at least two variables required");
  const auto basis = sl_basis(n);
  const auto monomials = monomial_basis(f.nvars(), f.degree());
  const bool divisor = mode == ActionMode::Divisor;

  QMatrix m(monomials.size(), basis.size() + (divisor ? 1 : 0));
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const HomPolynomial image = act(basis[col].matrix, f);
    for (std::size_t row = 0; row < monomials.size(); ++row)
      m.at(row, col) = image.coeff(monomials[row]);
  }
  if (divisor) {
    // last unknown is -lambda: act(a, f) - lambda f = 0
    for (std::size_t row = 0; row < monomials.size(); ++row)
      m.at(row, basis.size()) = -f.coeff(monomials[row]);
  }

  std::vector<QMatrix> mats;
  std::vector<Rational> lambdas;
  for (const auto& v : nullspace(m)) {
    QMatrix x(n, n);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (v[k] != 0) x = x + basis[k].matrix * v[k];
    mats.push_back(std::move(x));
    lambdas.push_back(divisor ? v[basis.size()] : Rational(0));
  }

  LieSubalgebra algebra = LieSubalgebra::from_basis(n, std::move(mats));
  if (!algebra.is_closed())
    throw InternalError("annihilator: kernel is not bracket-closed");
  if (divisor) {
    // certify each eigenvalue exactly
    for (std::size_t k = 0; k < algebra.dim(); ++k)
      if (act(algebra.basis()[k], f) != f.scale(lambdas[k]))
        throw InternalError("annihilator: eigenvalue certificate failed");
  }
  return Annihilator{mode, std::move(algebra), std::move(lambdas)};
}

int type_number(const HomPolynomial& f, const std::array<Rational, 3>& point) {
  if (f.nvars() != 3 || f.degree() != 3)
    throw DomainError("type_number: specified for plane cubics");
  if (point[0] == 0 && point[1] == 0 && point[2] == 0)
    throw DomainError("type_number: projective point must be nonzero");
  const Rational value = f.evaluate({point[0], point[1], point[2]});
  // Type = n - 2 rank(beta_x) with n = 2: the bivector vanishes exactly on
  // the cubic, where the type jumps from 0 to 2.
  return value == 0 ? 2 : 0;
}

} // namespace cubicsym
