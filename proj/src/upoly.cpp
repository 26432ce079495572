#include "upoly.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "cubicsym/errors.hpp"

namespace cubicsym::detail {

// ---------------------------------------------------------------- UPoly

UPoly UPoly::constant(const Rational& c) {
  UPoly p;
  if (c != 0) p.coeffs.push_back(c);
  return p;
}

UPoly UPoly::linear(const Rational& c0, const Rational& c1) {
  UPoly p;
  p.coeffs = {c0, c1};
  p.normalize();
  return p;
}

void UPoly::normalize() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Rational UPoly::eval(const Rational& x) const {
  Rational v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
  return v;
}

UPoly u_add(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  r.normalize();
  return r;
}

UPoly u_sub(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
  r.normalize();
  return r;
}

UPoly u_mul(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly::zero();
  UPoly r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  r.normalize();
  return r;
}

UPoly u_scale(const UPoly& a, const Rational& c) {
  if (c == 0) return UPoly::zero();
  UPoly r = a;
  for (auto& x : r.coeffs) x *= c;
  return r;
}

UPoly u_derivative(const UPoly& a) {
  UPoly r;
  for (std::size_t i = 1; i < a.coeffs.size(); ++i)
    r.coeffs.push_back(a.coeffs[i] * Rational(static_cast<int>(i)));
  r.normalize();
  return r;
}

UPoly u_monic(const UPoly& a) {
  if (a.is_zero()) return a;
  return u_scale(a, Rational(1) / a.lc());
}

std::pair<UPoly, UPoly> u_divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DomainError("u_divmod: division by zero polynomial");
  UPoly rem = a, quot;
  if (a.degree() >= b.degree())
    quot.coeffs.assign(a.degree() - b.degree() + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    const Rational c = rem.lc() / b.lc();
    quot.coeffs[shift] = c;
    for (std::size_t i = 0; i < b.coeffs.size(); ++i)
      rem.coeffs[shift + i] -= c * b.coeffs[i];
    rem.normalize();
  }
  quot.normalize();
  return {std::move(quot), std::move(rem)};
}

UPoly u_div_exact(const UPoly& a, const UPoly& b) {
  auto [q, r] = u_divmod(a, b);
  if (!r.is_zero()) throw InternalError("u_div_exact: division is not exact");
  return q;
}

UPoly u_gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = u_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return u_monic(a);
}

std::tuple<UPoly, UPoly, UPoly> u_gcd_ext(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(1), s1 = UPoly::zero();
  UPoly t0 = UPoly::zero(), t1 = UPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r2] = u_divmod(r0, r1);
    UPoly s2 = u_sub(s0, u_mul(q, s1));
    UPoly t2 = u_sub(t0, u_mul(q, t1));
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Rational inv = Rational(1) / r0.lc();
  return {u_scale(r0, inv), u_scale(s0, inv), u_scale(t0, inv)};
}

UPoly u_squarefree_part(const UPoly& p) {
  if (p.is_zero() || p.degree() == 0) return u_monic(p);
  UPoly g = u_gcd(p, u_derivative(p));
  return u_monic(u_div_exact(p, g));
}

namespace {

std::vector<Int> divisors_of(Int n) {
  if (n < 0) n = -n;
  if (n == 0) throw InternalError("divisors_of: zero");
  std::map<Int, int> factors;
  Int d = 2;
  while (d * d <= n) {
    while (n % d == 0) {
      ++factors[d];
      n /= d;
    }
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) ++factors[n];
  std::vector<Int> divs{1};
  for (const auto& [prime, mult] : factors) {
    const std::size_t cur = divs.size();
    Int pk = 1;
    for (int k = 1; k <= mult; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < cur; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

std::optional<Rational> rational_sqrt(const Rational& v) {
  if (v < 0) return std::nullopt;
  const Int num = numerator(v), den = denominator(v);
  const Int sn = boost::multiprecision::sqrt(num);
  const Int sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

} // namespace

std::vector<Rational> u_rational_roots(const UPoly& p) {
  std::vector<Rational> roots;
  if (p.is_zero()) throw DomainError("u_rational_roots: zero polynomial");
  UPoly q = p;
  // split off the root at 0
  std::size_t shift = 0;
  while (shift < q.coeffs.size() && q.coeffs[shift] == 0) ++shift;
  if (shift > 0) {
    roots.push_back(0);
    q.coeffs.erase(q.coeffs.begin(), q.coeffs.begin() + shift);
  }
  if (q.degree() >= 1) {
    if (q.degree() == 1) {
      roots.push_back(-q.coeffs[0] / q.coeffs[1]);
    } else if (q.degree() == 2) {
      const Rational &a = q.coeffs[2], &b = q.coeffs[1], &c = q.coeffs[0];
      if (auto s = rational_sqrt(b * b - 4 * a * c)) {
        roots.push_back((-b + *s) / (2 * a));
        if (*s != 0) roots.push_back((-b - *s) / (2 * a));
      }
    } else {
      // clear denominators, then enumerate p/q with p | a_0 and q | a_n
      Int lcm_den = 1;
      for (const auto& c : q.coeffs)
        lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
      std::vector<Int> ic(q.coeffs.size());
      for (std::size_t i = 0; i < q.coeffs.size(); ++i)
        ic[i] = numerator(Rational(q.coeffs[i] * lcm_den));
      const auto nums = divisors_of(ic.front());
      const auto dens = divisors_of(ic.back());
      for (const Int& num : nums)
        for (const Int& den : dens)
          for (int sign : {1, -1}) {
            const Rational cand(sign * num, den);
            if (q.eval(cand) == 0 &&
                std::find(roots.begin(), roots.end(), cand) == roots.end())
              roots.push_back(cand);
          }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// ---------------------------------------------------------------- BPoly

BPoly BPoly::from_upoly(const UPoly& u) {
  BPoly p;
  if (!u.is_zero()) p.coeffs.push_back(u);
  return p;
}

bool BPoly::is_constant() const {
  return coeffs.empty() || (coeffs.size() == 1 && coeffs[0].is_constant());
}

void BPoly::normalize() {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

BPoly b_add(const BPoly& a, const BPoly& b) {
  BPoly r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] = u_add(r.coeffs[i], a.coeffs[i]);
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] = u_add(r.coeffs[i], b.coeffs[i]);
  r.normalize();
  return r;
}

BPoly b_sub(const BPoly& a, const BPoly& b) {
  BPoly r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] = u_add(r.coeffs[i], a.coeffs[i]);
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] = u_sub(r.coeffs[i], b.coeffs[i]);
  r.normalize();
  return r;
}

BPoly b_mul(const BPoly& a, const BPoly& b) {
  if (a.is_zero() || b.is_zero()) return BPoly::zero();
  BPoly r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, UPoly::zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      r.coeffs[i + j] = u_add(r.coeffs[i + j], u_mul(a.coeffs[i], b.coeffs[j]));
  }
  r.normalize();
  return r;
}

BPoly b_derivative_y(const BPoly& a) {
  BPoly r;
  for (std::size_t i = 1; i < a.coeffs.size(); ++i)
    r.coeffs.push_back(u_scale(a.coeffs[i], Rational(static_cast<int>(i))));
  r.normalize();
  return r;
}

UPoly b_eval_x(const BPoly& a, const Rational& x0) {
  UPoly r;
  for (const auto& c : a.coeffs) r.coeffs.push_back(c.eval(x0));
  r.normalize();
  return r;
}

UPoly b_content(const BPoly& a) {
  UPoly g = UPoly::zero();
  for (const auto& c : a.coeffs) g = u_gcd(g, c);
  return g;
}

BPoly b_primitive(const BPoly& a) {
  if (a.is_zero()) return a;
  const UPoly cont = b_content(a);
  BPoly r = a;
  for (auto& c : r.coeffs) c = c.is_zero() ? c : u_div_exact(c, cont);
  return r;
}

namespace {

// pseudo-remainder of a by b in the main variable y
BPoly b_prem(BPoly a, const BPoly& b) {
  const int db = b.degy();
  const UPoly& lb = b.lcy();
  while (!a.is_zero() && a.degy() >= db) {
    const int shift = a.degy() - db;
    const UPoly la = a.lcy();
    // a <- lb * a - la * y^shift * b
    BPoly scaled_a;
    scaled_a.coeffs.resize(a.coeffs.size());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
      scaled_a.coeffs[i] = u_mul(a.coeffs[i], lb);
    BPoly shifted_b;
    shifted_b.coeffs.assign(shift, UPoly::zero());
    for (const auto& c : b.coeffs) shifted_b.coeffs.push_back(u_mul(c, la));
    a = b_sub(scaled_a, shifted_b);
  }
  return a;
}

} // namespace

BPoly b_gcd(const BPoly& a, const BPoly& b) {
  if (a.is_zero()) return b_primitive(b);
  if (b.is_zero()) return b_primitive(a);
  if (a.degy() == 0 && b.degy() == 0)
    return BPoly::from_upoly(u_gcd(a.coeffs[0], b.coeffs[0]));
  if (a.degy() == 0) return BPoly::from_upoly(u_gcd(a.coeffs[0], b_content(b)));
  if (b.degy() == 0) return BPoly::from_upoly(u_gcd(b.coeffs[0], b_content(a)));

  const UPoly cont = u_gcd(b_content(a), b_content(b));
  BPoly p = b_primitive(a), q = b_primitive(b);
  if (p.degy() < q.degy()) std::swap(p, q);
  while (!q.is_zero()) {
    BPoly r = b_primitive(b_prem(p, q));
    p = std::move(q);
    q = std::move(r);
  }
  // attach the content and normalize so the leading y-coefficient is monic
  BPoly g = p;
  for (auto& c : g.coeffs) c = u_mul(c, cont);
  const Rational lead = g.lcy().lc();
  for (auto& c : g.coeffs) c = u_scale(c, Rational(1) / lead);
  return g;
}

BPoly b_div_exact(const BPoly& a, const BPoly& b) {
  if (b.is_zero()) throw DomainError("b_div_exact: division by zero");
  if (a.is_zero()) return a;
  if (b.degy() == 0) {
    BPoly r = a;
    for (auto& c : r.coeffs) c = c.is_zero() ? c : u_div_exact(c, b.coeffs[0]);
    return r;
  }
  BPoly rem = a, quot;
  if (a.degy() >= b.degy()) quot.coeffs.assign(a.degy() - b.degy() + 1, UPoly::zero());
  while (!rem.is_zero() && rem.degy() >= b.degy()) {
    const int shift = rem.degy() - b.degy();
    const UPoly qc = u_div_exact(rem.lcy(), b.lcy());
    quot.coeffs[shift] = u_add(quot.coeffs[shift], qc);
    BPoly sub;
    sub.coeffs.assign(shift, UPoly::zero());
    for (const auto& c : b.coeffs) sub.coeffs.push_back(u_mul(c, qc));
    rem = b_sub(rem, sub);
  }
  if (!rem.is_zero()) throw InternalError("b_div_exact: division is not exact");
  quot.normalize();
  return quot;
}

namespace {

UPoly upoly_matrix_det(std::vector<std::vector<UPoly>>& m, std::vector<int> cols) {
  const std::size_t row = m.size() - cols.size();
  if (cols.size() == 1) return m[row][cols[0]];
  UPoly det = UPoly::zero();
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (m[row][cols[k]].is_zero()) continue;
    std::vector<int> rest;
    rest.reserve(cols.size() - 1);
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != k) rest.push_back(cols[j]);
    UPoly term = u_mul(m[row][cols[k]], upoly_matrix_det(m, rest));
    det = (k % 2 == 0) ? u_add(det, term) : u_sub(det, term);
  }
  return det;
}

} // namespace

UPoly b_resultant_y(const BPoly& a, const BPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly::zero();
  const int m = a.degy(), n = b.degy();
  if (m == 0 && n == 0) return UPoly::constant(1);
  if (m == 0) {
    // Res(constant-in-y u, b) = u^degy(b)
    UPoly r = UPoly::constant(1);
    for (int k = 0; k < n; ++k) r = u_mul(r, a.coeffs[0]);
    return r;
  }
  if (n == 0) {
    UPoly r = UPoly::constant(1);
    for (int k = 0; k < m; ++k) r = u_mul(r, b.coeffs[0]);
    return r;
  }
  const int size = m + n;
  std::vector<std::vector<UPoly>> s(size, std::vector<UPoly>(size, UPoly::zero()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = a.coeffs[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = b.coeffs[n - j];
  std::vector<int> cols(size);
  for (int i = 0; i < size; ++i) cols[i] = i;
  return upoly_matrix_det(s, cols);
}

// ---------------------------------------------------------- QuotientRing

QuotientRing::QuotientRing(UPoly modulus) : m_(std::move(modulus)) {
  if (m_.degree() < 1) throw DomainError("QuotientRing: modulus must be nonconstant");
  if (m_.lc() != 1) throw DomainError("QuotientRing: modulus must be monic");
}

UPoly QuotientRing::reduce(const UPoly& a) const {
  if (a.degree() < m_.degree()) return a;
  return u_divmod(a, m_).second;
}

UPoly QuotientRing::invert(const UPoly& a) const {
  const UPoly r = reduce(a);
  if (r.is_zero()) throw DomainError("QuotientRing::invert: zero element");
  auto [g, s, t] = u_gcd_ext(m_, r);
  if (g.degree() == 0) return reduce(t);
  if (g.degree() == m_.degree())
    throw InternalError("QuotientRing::invert: reduced element is zero");
  throw SplitDetected{g};
}

// ------------------------------------------------------------- APoly

APoly a_from_bpoly(const QuotientRing& ring, const BPoly& p) {
  APoly r;
  for (const auto& c : p.coeffs) r.push_back(ring.reduce(c));
  return a_normalize(ring, std::move(r));
}

APoly a_normalize(const QuotientRing&, APoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

int a_degy(const APoly& p) { return static_cast<int>(p.size()) - 1; }

APoly a_monic(const QuotientRing& ring, const APoly& p) {
  if (p.empty()) return p;
  const UPoly inv = ring.invert(p.back());
  APoly r;
  r.reserve(p.size());
  for (const auto& c : p) r.push_back(ring.mul(c, inv));
  r.back() = UPoly::constant(1);
  return r;
}

APoly a_mod(const QuotientRing& ring, APoly a, const APoly& b_monic) {
  if (b_monic.empty()) throw DomainError("a_mod: division by zero");
  a = a_normalize(ring, std::move(a));
  const int db = a_degy(b_monic);
  while (!a.empty() && a_degy(a) >= db) {
    const int shift = a_degy(a) - db;
    const UPoly lead = a.back();
    for (int i = 0; i <= db; ++i)
      a[shift + i] = ring.sub(a[shift + i], ring.mul(lead, b_monic[i]));
    a = a_normalize(ring, std::move(a));
  }
  return a;
}

APoly a_div_exact(const QuotientRing& ring, APoly a, const APoly& b_monic) {
  if (b_monic.empty()) throw DomainError("a_div_exact: division by zero");
  a = a_normalize(ring, std::move(a));
  const int db = a_degy(b_monic);
  if (a.empty()) return a;
  if (a_degy(a) < db) throw InternalError("a_div_exact: division is not exact");
  APoly quot(a_degy(a) - db + 1, UPoly::zero());
  while (!a.empty() && a_degy(a) >= db) {
    const int shift = a_degy(a) - db;
    const UPoly lead = a.back();
    quot[shift] = lead;
    for (int i = 0; i <= db; ++i)
      a[shift + i] = ring.sub(a[shift + i], ring.mul(lead, b_monic[i]));
    a = a_normalize(ring, std::move(a));
  }
  if (!a.empty()) throw InternalError("a_div_exact: division is not exact");
  return a_normalize(ring, std::move(quot));
}

APoly a_gcd(const QuotientRing& ring, APoly a, APoly b) {
  a = a_normalize(ring, std::move(a));
  b = a_normalize(ring, std::move(b));
  if (a_degy(a) < a_degy(b)) std::swap(a, b);
  while (!b.empty()) {
    APoly bm = a_monic(ring, b);
    APoly r = a_mod(ring, std::move(a), bm);
    a = std::move(bm);
    b = std::move(r);
  }
  return a.empty() ? a : a_monic(ring, a);
}

APoly a_derivative_y(const QuotientRing& ring, const APoly& p) {
  APoly r;
  for (std::size_t i = 1; i < p.size(); ++i)
    r.push_back(ring.reduce(u_scale(p[i], Rational(static_cast<int>(i)))));
  return a_normalize(ring, std::move(r));
}

APoly a_squarefree_part(const QuotientRing& ring, const APoly& p) {
  APoly pm = a_monic(ring, a_normalize(ring, p));
  if (a_degy(pm) <= 0) return pm;
  const APoly d = a_derivative_y(ring, pm);
  const APoly g = a_gcd(ring, pm, d);
  if (a_degy(g) <= 0) return pm;
  return a_monic(ring, a_div_exact(ring, pm, g));
}

// --------------------------------------------------- system analysis

namespace {

struct PreparedSystem {
  std::vector<BPoly> polys; // nonzero, nonconstant
  bool empty_variety = false;
};

// drops zero polynomials, detects nonzero constants (empty variety) and
// provably infinite zero sets
PreparedSystem prepare(std::vector<BPoly> system) {
  PreparedSystem out;
  for (auto& p : system) {
    p.normalize();
    if (p.is_zero()) continue;
    if (p.is_constant()) {
      out.empty_variety = true;
      return out;
    }
    out.polys.push_back(std::move(p));
  }
  if (out.polys.empty())
    throw InternalError("affine system: zero set is the whole plane");
  if (out.polys.size() == 1)
    throw InternalError("affine system: zero set contains a curve");
  return out;
}

// detects a pair with a nonconstant gcd; returns (i, j, gcd)
std::optional<std::tuple<std::size_t, std::size_t, BPoly>> find_common_factor(
    const std::vector<BPoly>& polys) {
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      BPoly g = b_gcd(polys[i], polys[j]);
      if (!g.is_constant()) return std::make_tuple(i, j, std::move(g));
    }
  return std::nullopt;
}

UPoly candidate_eliminant(const std::vector<BPoly>& polys) {
  UPoly e = UPoly::zero();
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      UPoly r = b_resultant_y(polys[i], polys[j]);
      if (r.is_zero())
        throw InternalError("candidate_eliminant: vanishing resultant for a coprime pair");
      e = u_gcd(e, r);
      if (e.degree() == 0) return e;
    }
  return e;
}

AffineZeros analyze_coprime(const std::vector<BPoly>& polys) {
  AffineZeros out;
  UPoly e = candidate_eliminant(polys);
  if (e.degree() == 0) return out;
  std::vector<UPoly> worklist{u_squarefree_part(e)};
  while (!worklist.empty()) {
    UPoly m = std::move(worklist.back());
    worklist.pop_back();
    if (m.degree() == 0) continue;
    try {
      QuotientRing ring(m);
      APoly g;
      for (const auto& p : polys) g = a_gcd(ring, g, a_from_bpoly(ring, p));
      if (g.empty())
        throw InternalError("affine system: vertical line inside a finite zero set");
      if (a_degy(g) == 0) continue; // candidates with no actual solution
      APoly fiber = a_squarefree_part(ring, g);
      out.count += m.degree() * a_degy(fiber);
      out.components.push_back(SolvedComponent{m, std::move(fiber)});
    } catch (const SplitDetected& split) {
      UPoly w = u_monic(split.factor);
      worklist.push_back(u_div_exact(m, w));
      worklist.push_back(std::move(w));
    }
  }
  return out;
}

int count_affine(std::vector<BPoly> system, int depth);

// count of V(S' + {p_i, p_j}) where gcd(p_i, p_j) = g is nonconstant:
// V(p_i) cap V(p_j) = V(g) cup V(p_i/g, p_j/g), then inclusion-exclusion.
int count_refined(const std::vector<BPoly>& rest, const BPoly& pi, const BPoly& pj,
                  const BPoly& g, int depth) {
  const BPoly ai = b_div_exact(pi, g);
  const BPoly aj = b_div_exact(pj, g);
  std::vector<BPoly> with_g = rest;
  with_g.push_back(g);
  std::vector<BPoly> with_ab = rest;
  with_ab.push_back(ai);
  with_ab.push_back(aj);
  std::vector<BPoly> with_all = rest;
  with_all.push_back(g);
  with_all.push_back(ai);
  with_all.push_back(aj);
  return count_affine(std::move(with_g), depth) +
         count_affine(std::move(with_ab), depth) -
         count_affine(std::move(with_all), depth);
}

int count_affine(std::vector<BPoly> system, int depth) {
  if (depth > 64) throw InternalError("count_affine: refinement recursion too deep");
  PreparedSystem prep = prepare(std::move(system));
  if (prep.empty_variety) return 0;
  if (auto common = find_common_factor(prep.polys)) {
    auto& [i, j, g] = *common;
    std::vector<BPoly> rest;
    for (std::size_t k = 0; k < prep.polys.size(); ++k)
      if (k != i && k != j) rest.push_back(prep.polys[k]);
    return count_refined(rest, prep.polys[i], prep.polys[j], g, depth + 1);
  }
  return analyze_coprime(prep.polys).count;
}

void rational_zeros_coprime(const std::vector<BPoly>& polys,
                            std::vector<AffinePoint>& out) {
  UPoly e = candidate_eliminant(polys);
  if (e.degree() == 0) return;
  const UPoly esf = u_squarefree_part(e);
  for (const Rational& x0 : u_rational_roots(esf)) {
    UPoly fiber_gcd = UPoly::zero();
    bool whole_line = true;
    for (const auto& p : polys) {
      UPoly spec = b_eval_x(p, x0);
      if (!spec.is_zero()) whole_line = false;
      fiber_gcd = u_gcd(fiber_gcd, spec);
    }
    if (whole_line)
      throw InternalError("rational zeros: vertical line inside a finite zero set");
    if (fiber_gcd.is_zero() || fiber_gcd.degree() == 0) continue;
    for (const Rational& y0 : u_rational_roots(fiber_gcd))
      out.push_back(AffinePoint{x0, y0});
  }
}

void rational_zeros_rec(std::vector<BPoly> system, std::vector<AffinePoint>& out,
                        int depth) {
  if (depth > 64) throw InternalError("rational zeros: refinement recursion too deep");
  PreparedSystem prep = prepare(std::move(system));
  if (prep.empty_variety) return;
  if (auto common = find_common_factor(prep.polys)) {
    auto& [i, j, g] = *common;
    std::vector<BPoly> rest;
    for (std::size_t k = 0; k < prep.polys.size(); ++k)
      if (k != i && k != j) rest.push_back(prep.polys[k]);
    std::vector<BPoly> with_g = rest;
    with_g.push_back(g);
    std::vector<BPoly> with_ab = rest;
    with_ab.push_back(b_div_exact(prep.polys[i], g));
    with_ab.push_back(b_div_exact(prep.polys[j], g));
    rational_zeros_rec(std::move(with_g), out, depth + 1);
    rational_zeros_rec(std::move(with_ab), out, depth + 1);
    return;
  }
  rational_zeros_coprime(prep.polys, out);
}

} // namespace

AffineZeros analyze_affine_system(std::vector<BPoly> system) {
  PreparedSystem prep = prepare(std::move(system));
  if (prep.empty_variety) return {};
  if (auto common = find_common_factor(prep.polys)) {
    auto& [i, j, g] = *common;
    std::vector<BPoly> rest;
    for (std::size_t k = 0; k < prep.polys.size(); ++k)
      if (k != i && k != j) rest.push_back(prep.polys[k]);
    AffineZeros out;
    out.count = count_refined(rest, prep.polys[i], prep.polys[j], g, 1);
    // overlapping union branches: component list intentionally left empty
    return out;
  }
  return analyze_coprime(prep.polys);
}

std::vector<AffinePoint> rational_affine_zeros(const std::vector<BPoly>& system) {
  std::vector<AffinePoint> out;
  rational_zeros_rec(system, out, 0);
  std::sort(out.begin(), out.end(), [](const AffinePoint& a, const AffinePoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace cubicsym::detail
