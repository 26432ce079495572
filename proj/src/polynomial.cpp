#include "cubicsym/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cubicsym/errors.hpp"

namespace cubicsym {

int Monomial::degree() const {
  return std::accumulate(exp.begin(), exp.end(), 0);
}

bool GradedLexDescending::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  // lex with z0 weighted most: larger exponent on the first differing
  // variable comes first
  return std::lexicographical_compare(b.exp.begin(), b.exp.end(),
                                      a.exp.begin(), a.exp.end());
}

std::vector<Monomial> monomial_basis(int nvars, int degree) {
  std::vector<Monomial> out;
  Monomial cur{std::vector<int>(nvars, 0)};
  // depth-first with the leading variable taking the largest share first
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      cur.exp[var] = remaining;
      out.push_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur.exp[var] = e;
      self(self, var + 1, remaining - e);
    }
    cur.exp[var] = 0;
  };
  if (nvars <= 0) throw DomainError("monomial_basis: nvars must be positive");
  rec(rec, 0, degree);
  return out;
}

HomPolynomial::HomPolynomial(int nvars, int degree)
    : nvars_(nvars), degree_(degree) {
  if (nvars < 1) throw DomainError("HomPolynomial: nvars must be positive");
  if (degree < 0) throw DomainError("HomPolynomial: degree must be nonnegative");
}

HomPolynomial HomPolynomial::constant(int nvars, const Rational& value) {
  HomPolynomial p(nvars, 0);
  if (value != 0) p.terms_.emplace(Monomial{std::vector<int>(nvars, 0)}, value);
  return p;
}

HomPolynomial HomPolynomial::variable(int nvars, int index) {
  if (index < 0 || index >= nvars)
    throw DomainError("HomPolynomial::variable: index out of range");
  HomPolynomial p(nvars, 1);
  Monomial m{std::vector<int>(nvars, 0)};
  m.exp[index] = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

HomPolynomial HomPolynomial::from_terms(
    int nvars, int degree, const std::vector<std::pair<Monomial, Rational>>& terms) {
  HomPolynomial p(nvars, degree);
  for (const auto& [m, c] : terms) p.insert_term(m, c);
  return p;
}

void HomPolynomial::insert_term(const Monomial& m, const Rational& c) {
  if (static_cast<int>(m.exp.size()) != nvars_)
    throw DomainError("term has wrong variable count");
  if (m.degree() != degree_)
    throw DomainError("term degree does not match polynomial degree");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational HomPolynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Monomial, Rational>& HomPolynomial::leading() const {
  if (terms_.empty()) throw DomainError("leading: zero polynomial");
  return *terms_.begin();
}

HomPolynomial HomPolynomial::add(const HomPolynomial& other) const {
  if (nvars_ != other.nvars_)
    throw DomainError("add: variable count mismatch");
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  if (degree_ != other.degree_) {
    std::ostringstream os;
    os << "add: non-homogeneous result, degrees " << degree_ << " and "
       << other.degree_;
    throw DomainError(os.str());
  }
  HomPolynomial r = *this;
  for (const auto& [m, c] : other.terms_) r.insert_term(m, c);
  return r;
}

HomPolynomial HomPolynomial::sub(const HomPolynomial& other) const {
  return add(other.scale(-1));
}

HomPolynomial HomPolynomial::scale(const Rational& c) const {
  HomPolynomial r(nvars_, degree_);
  if (c == 0) return r;
  for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
  return r;
}

HomPolynomial HomPolynomial::mul(const HomPolynomial& other) const {
  if (nvars_ != other.nvars_)
    throw DomainError("mul: variable count mismatch");
  HomPolynomial r(nvars_, degree_ + other.degree_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) {
      Monomial m = ma;
      for (int v = 0; v < nvars_; ++v) m.exp[v] += mb.exp[v];
      r.insert_term(m, ca * cb);
    }
  return r;
}

HomPolynomial HomPolynomial::pow(int e) const {
  if (e < 0) throw DomainError("pow: negative exponent");
  HomPolynomial r = HomPolynomial::constant(nvars_, 1);
  for (int k = 0; k < e; ++k) r = r.mul(*this);
  return r;
}

HomPolynomial HomPolynomial::partial(int var) const {
  if (var < 0 || var >= nvars_)
    throw DomainError("partial: variable index out of range");
  if (degree_ == 0) return HomPolynomial(nvars_, 0);
  HomPolynomial r(nvars_, degree_ - 1);
  for (const auto& [m, c] : terms_) {
    if (m.exp[var] == 0) continue;
    Monomial d = m;
    d.exp[var] -= 1;
    r.insert_term(d, c * m.exp[var]);
  }
  return r;
}

Rational HomPolynomial::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw DomainError("evaluate: point has wrong dimension");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < m.exp[i]; ++e) v *= point[i];
    total += v;
  }
  return total;
}

HomPolynomial HomPolynomial::normalized_monic() const {
  if (is_zero()) return *this;
  return scale(Rational(1) / leading().second);
}

std::string HomPolynomial::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    const bool constant_term = m.degree() == 0;
    if (mag != 1 || constant_term) {
      os << to_string(mag);
      if (!constant_term) os << "*";
    }
    bool first_var = true;
    for (int v = 0; v < nvars_; ++v) {
      if (m.exp[v] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << "z" << v;
      if (m.exp[v] > 1) os << "^" << m.exp[v];
    }
  }
  return os.str();
}

ProjectiveTransform::ProjectiveTransform(QMatrix m) : matrix_(std::move(m)) {
  if (!matrix_.is_square())
    throw DomainError("ProjectiveTransform: matrix must be square");
  if (determinant(matrix_) == 0)
    throw DomainError("ProjectiveTransform: matrix must be invertible");
}

ProjectiveTransform ProjectiveTransform::compose(const ProjectiveTransform& other) const {
  return ProjectiveTransform(matrix_ * other.matrix());
}

ProjectiveTransform ProjectiveTransform::inverted() const {
  return ProjectiveTransform(inverse(matrix_));
}

HomPolynomial apply_transform(const HomPolynomial& f, const ProjectiveTransform& g) {
  const std::size_t n = g.matrix().rows();
  if (static_cast<int>(n) != f.nvars())
    throw DomainError("apply_transform: transform size != variable count");
  // linear form replacing each variable
  std::vector<HomPolynomial> forms;
  forms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    HomPolynomial form(f.nvars(), 1);
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& c = g.matrix().at(i, j);
      if (c == 0) continue;
      form = form.add(HomPolynomial::variable(f.nvars(), static_cast<int>(j)).scale(c));
    }
    forms.push_back(std::move(form));
  }
  HomPolynomial result(f.nvars(), f.degree());
  for (const auto& [m, c] : f.terms()) {
    HomPolynomial term = HomPolynomial::constant(f.nvars(), c);
    for (int v = 0; v < f.nvars(); ++v)
      for (int e = 0; e < m.exp[v]; ++e) term = term.mul(forms[v]);
    result = result.add(term);
  }
  return result;
}

HomPolynomial divide_exact(const HomPolynomial& f, const HomPolynomial& g) {
  if (g.is_zero()) throw DomainError("divide_exact: division by zero polynomial");
  if (f.nvars() != g.nvars()) throw DomainError("divide_exact: variable count mismatch");
  if (f.is_zero()) return HomPolynomial(f.nvars(), 0);
  if (f.degree() < g.degree())
    throw InternalError("divide_exact: divisor degree exceeds dividend degree");

  HomPolynomial quotient(f.nvars(), f.degree() - g.degree());
  HomPolynomial rem = f;
  const auto& [gm, gc] = g.leading();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading();
    Monomial q = rm;
    bool divisible = true;
    for (int v = 0; v < f.nvars(); ++v) {
      q.exp[v] -= gm.exp[v];
      if (q.exp[v] < 0) divisible = false;
    }
    if (!divisible)
      throw InternalError("divide_exact: not an exact division");
    const Rational qc = rc / gc;
    HomPolynomial qterm = HomPolynomial::from_terms(f.nvars(), q.degree(), {{q, qc}});
    quotient = quotient.add(qterm);
    rem = rem.sub(qterm.mul(g));
  }
  return quotient;
}

} // namespace cubicsym
