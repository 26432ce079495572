#include <algorithm>

#include "cubicsym/errors.hpp"
#include "cubicsym/polynomial.hpp"
#include "upoly.hpp"

// Homogeneous gcd machinery: strip monomial content, dehomogenize with
// respect to a variable both arguments depend on, run the bivariate
// primitive-PRS gcd, rehomogenize. Homogenization is multiplicative and
// dehomogenization loses nothing once no single variable divides the
// argument, so this computes the true homogeneous gcd.

namespace cubicsym {
namespace {

using detail::BPoly;
using detail::UPoly;

std::vector<int> monomial_content(const HomPolynomial& f) {
  std::vector<int> mins(f.nvars(), -1);
  for (const auto& [m, c] : f.terms())
    for (int v = 0; v < f.nvars(); ++v)
      mins[v] = mins[v] < 0 ? m.exp[v] : std::min(mins[v], m.exp[v]);
  for (auto& x : mins)
    if (x < 0) x = 0;
  return mins;
}

HomPolynomial shift_down(const HomPolynomial& f, const std::vector<int>& shift) {
  int total = 0;
  for (int s : shift) total += s;
  std::vector<std::pair<Monomial, Rational>> terms;
  for (const auto& [m, c] : f.terms()) {
    Monomial e = m;
    for (int v = 0; v < f.nvars(); ++v) e.exp[v] -= shift[v];
    terms.emplace_back(std::move(e), c);
  }
  return HomPolynomial::from_terms(f.nvars(), f.degree() - total, terms);
}

HomPolynomial monomial_poly(int nvars, const std::vector<int>& exps) {
  Monomial m{exps};
  return HomPolynomial::from_terms(nvars, m.degree(), {{m, Rational(1)}});
}

bool uses_variable(const HomPolynomial& f, int v) {
  for (const auto& [m, c] : f.terms())
    if (m.exp[v] > 0) return true;
  return false;
}

// other variables of the chart, ascending
std::vector<int> chart_vars(int nvars, int v) {
  std::vector<int> others;
  for (int i = 0; i < nvars; ++i)
    if (i != v) others.push_back(i);
  return others;
}

BPoly to_bpoly_chart(const HomPolynomial& f, int v) {
  const auto others = chart_vars(f.nvars(), v);
  BPoly p;
  for (const auto& [m, c] : f.terms()) {
    const int xe = m.exp[others[0]];
    const int ye = others.size() > 1 ? m.exp[others[1]] : 0;
    if (static_cast<int>(p.coeffs.size()) <= ye) p.coeffs.resize(ye + 1);
    UPoly& u = p.coeffs[ye];
    if (static_cast<int>(u.coeffs.size()) <= xe) u.coeffs.resize(xe + 1, Rational(0));
    u.coeffs[xe] += c;
  }
  for (auto& u : p.coeffs) u.normalize();
  p.normalize();
  return p;
}

HomPolynomial rehomogenize(const BPoly& p, int nvars, int v) {
  const auto others = chart_vars(nvars, v);
  int total = 0;
  for (int ye = 0; ye < static_cast<int>(p.coeffs.size()); ++ye) {
    const UPoly& u = p.coeffs[ye];
    for (int xe = 0; xe < static_cast<int>(u.coeffs.size()); ++xe)
      if (u.coeffs[xe] != 0) total = std::max(total, xe + ye);
  }
  std::vector<std::pair<Monomial, Rational>> terms;
  for (int ye = 0; ye < static_cast<int>(p.coeffs.size()); ++ye) {
    const UPoly& u = p.coeffs[ye];
    for (int xe = 0; xe < static_cast<int>(u.coeffs.size()); ++xe) {
      if (u.coeffs[xe] == 0) continue;
      Monomial m{std::vector<int>(nvars, 0)};
      m.exp[others[0]] = xe;
      if (others.size() > 1) m.exp[others[1]] = ye;
      m.exp[v] = total - xe - ye;
      terms.emplace_back(std::move(m), u.coeffs[xe]);
    }
  }
  return HomPolynomial::from_terms(nvars, total, terms);
}

} // namespace

HomPolynomial poly_gcd(const HomPolynomial& p, const HomPolynomial& q) {
  if (p.nvars() != q.nvars())
    throw DomainError("poly_gcd: variable count mismatch");
  if (p.nvars() > 3)
    throw DomainError("poly_gcd: implemented for at most 3 variables");
  if (p.is_zero()) return q.normalized_monic();
  if (q.is_zero()) return p.normalized_monic();

  const std::vector<int> mono_p = monomial_content(p);
  const std::vector<int> mono_q = monomial_content(q);
  std::vector<int> mono_g(p.nvars());
  for (int v = 0; v < p.nvars(); ++v) mono_g[v] = std::min(mono_p[v], mono_q[v]);
  const HomPolynomial ps = shift_down(p, mono_p);
  const HomPolynomial qs = shift_down(q, mono_q);
  const HomPolynomial mono = monomial_poly(p.nvars(), mono_g);

  if (ps.degree() == 0 || qs.degree() == 0) return mono;

  int v = -1;
  for (int cand = 0; cand < p.nvars(); ++cand)
    if (uses_variable(ps, cand) && uses_variable(qs, cand)) {
      v = cand;
      break;
    }
  if (v < 0) return mono; // disjoint variable supports: coprime cores

  const BPoly g = detail::b_gcd(to_bpoly_chart(ps, v), to_bpoly_chart(qs, v));
  return mono.mul(rehomogenize(g, p.nvars(), v)).normalized_monic();
}

HomPolynomial gcd_partials(const HomPolynomial& f) {
  if (f.is_zero()) throw DomainError("gcd_partials: zero polynomial");
  if (f.degree() < 1) throw DomainError("gcd_partials: degree must be at least 1");
  HomPolynomial g(f.nvars(), 0);
  for (int v = 0; v < f.nvars(); ++v) {
    const HomPolynomial d = f.partial(v);
    if (d.is_zero()) continue;
    g = g.is_zero() ? d.normalized_monic() : poly_gcd(g, d);
    if (!g.is_zero() && g.degree() == 0) break;
  }
  if (g.is_zero())
    throw InternalError("gcd_partials: all partial derivatives vanished");
  return g;
}

SquarefreeDecomposition factor_squarefree(const HomPolynomial& f) {
  if (f.is_zero()) throw DomainError("factor_squarefree: zero polynomial");
  SquarefreeDecomposition out;
  out.constant = 1;
  if (f.degree() == 0) {
    out.constant = f.leading().second;
    return out;
  }
  // gcd of the partials is prod p_i^{m_i - 1} in characteristic zero, so
  // the decomposition of f follows from the decomposition of that gcd with
  // every multiplicity bumped by one.
  const HomPolynomial g = gcd_partials(f);
  const HomPolynomial r = divide_exact(f, g); // c * prod of distinct primes
  if (g.degree() == 0) {
    HomPolynomial radical = r.normalized_monic();
    out.constant = r.leading().second;
    out.factors.emplace_back(std::move(radical), 1);
    return out;
  }
  const SquarefreeDecomposition sub = factor_squarefree(g);
  HomPolynomial rad_g = HomPolynomial::constant(f.nvars(), 1);
  for (const auto& [q, mult] : sub.factors) rad_g = rad_g.mul(q);
  const HomPolynomial mult1 = divide_exact(r, rad_g);
  out.constant = mult1.leading().second;
  if (mult1.degree() > 0)
    out.factors.emplace_back(mult1.normalized_monic(), 1);
  for (const auto& [q, mult] : sub.factors) out.factors.emplace_back(q, mult + 1);
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

} // namespace cubicsym
