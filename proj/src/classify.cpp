#include "cubicsym/classify.hpp"

#include <algorithm>

#include "cubicsym/errors.hpp"
#include "cubicsym/parser.hpp"
#include "upoly.hpp"

namespace cubicsym {

namespace {

using detail::BPoly;
using detail::UPoly;

constexpr std::array<std::pair<CurveType, const char*>, 9> kTypeNames{{
    {CurveType::SmoothElliptic, "SmoothElliptic"},
    {CurveType::Nodal, "Nodal"},
    {CurveType::Cuspidal, "Cuspidal"},
    {CurveType::ConicLineGeneral, "ConicLineGeneral"},
    {CurveType::ConicLineTangent, "ConicLineTangent"},
    {CurveType::ThreeLinesGeneral, "ThreeLinesGeneral"},
    {CurveType::ThreeLinesConcurrent, "ThreeLinesConcurrent"},
    {CurveType::DoubleLinePlusLine, "DoubleLinePlusLine"},
    {CurveType::TripleLine, "TripleLine"},
}};

constexpr std::array<const char*, 9> kNormalForms{
    "z0^3 + z1^3 + z2^3",
    "-z0^3 - z0^2*z2 + z1^2*z2",
    "-z0^3 + z1^2*z2",
    "z2*(z0^2 + z1^2 - z2^2)",
    "(z1 - z2)*(z0^2 + z1^2 - z2^2)",
    "z0*z1*z2",
    "z0*z1*(z0 + z1)",
    "z0^2*z1",
    "z0^3",
};

} // namespace

std::string_view to_string(CurveType t) {
  for (const auto& [type, name] : kTypeNames)
    if (type == t) return name;
  throw InternalError("to_string: unknown curve type");
}

std::optional<CurveType> curve_type_from_string(std::string_view name) {
  for (const auto& [type, tag] : kTypeNames)
    if (name == tag) return type;
  return std::nullopt;
}

const std::array<CurveType, 9>& figure_order() {
  static const std::array<CurveType, 9> order{
      CurveType::SmoothElliptic,      CurveType::Nodal,
      CurveType::Cuspidal,            CurveType::ConicLineGeneral,
      CurveType::ConicLineTangent,    CurveType::ThreeLinesGeneral,
      CurveType::ThreeLinesConcurrent, CurveType::DoubleLinePlusLine,
      CurveType::TripleLine,
  };
  return order;
}

HomPolynomial normal_form(CurveType t) {
  const auto& order = figure_order();
  for (std::size_t i = 0; i < order.size(); ++i)
    if (order[i] == t) return parse_polynomial(kNormalForms[i], 3);
  throw InternalError("normal_form: unknown curve type");
}

ProjectivePoint canonical_point(const std::array<Rational, 3>& coords) {
  Int lcm_den = 1;
  for (const auto& c : coords)
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
  std::array<Int, 3> ints;
  for (int i = 0; i < 3; ++i) ints[i] = numerator(Rational(coords[i] * lcm_den));
  Int g = 0;
  for (const auto& v : ints) g = boost::multiprecision::gcd(g, v);
  if (g == 0) throw DomainError("canonical_point: zero point");
  int sign = 1;
  for (const auto& v : ints)
    if (v != 0) {
      sign = v < 0 ? -1 : 1;
      break;
    }
  ProjectivePoint p;
  for (int i = 0; i < 3; ++i) p.coords[i] = Rational(ints[i] * sign, g);
  return p;
}

namespace {

void require_cubic(const HomPolynomial& f, const char* op) {
  if (f.nvars() != 3)
    throw DomainError(std::string(op) + ": expected 3 variables, got " +
                      std::to_string(f.nvars()));
  if (f.is_zero()) throw DomainError(std::string(op) + ": zero polynomial");
  if (f.degree() != 3)
    throw DomainError(std::string(op) + ": expected degree 3, got " +
                      std::to_string(f.degree()));
}

// chart z2 = 1 with (x, y) = (z0, z1)
BPoly affine_chart(const HomPolynomial& q) {
  BPoly p;
  for (const auto& [m, c] : q.terms()) {
    const int xe = m.exp[0], ye = m.exp[1];
    if (static_cast<int>(p.coeffs.size()) <= ye) p.coeffs.resize(ye + 1);
    UPoly& u = p.coeffs[ye];
    if (static_cast<int>(u.coeffs.size()) <= xe) u.coeffs.resize(xe + 1, Rational(0));
    u.coeffs[xe] += c;
  }
  for (auto& u : p.coeffs) u.normalize();
  p.normalize();
  return p;
}

// binary form q(z0, z1, 0) as a polynomial in t = z0 (z1 = 1), plus the
// formal degree needed to read the root [1:0] off a degree drop
struct LineRestriction {
  UPoly u;
  int formal_degree;
};

LineRestriction line_chart(const HomPolynomial& q) {
  LineRestriction r{UPoly::zero(), q.degree()};
  for (const auto& [m, c] : q.terms()) {
    if (m.exp[2] != 0) continue;
    const int xe = m.exp[0];
    if (static_cast<int>(r.u.coeffs.size()) <= xe) r.u.coeffs.resize(xe + 1, Rational(0));
    r.u.coeffs[xe] += c;
  }
  r.u.normalize();
  return r;
}

struct LineLocus {
  int count = 0;
  std::vector<std::array<Rational, 3>> rational_points;
  bool want_points;
};

// common zeros on the line z2 = 0 of the given forms
LineLocus analyze_line_locus(const std::vector<HomPolynomial>& forms, bool want_points) {
  LineLocus out;
  out.want_points = want_points;
  UPoly g = UPoly::zero();
  bool all_zero = true;
  bool infinity_root = true; // [1:0:0] common?
  for (const auto& q : forms) {
    const LineRestriction r = line_chart(q);
    if (r.u.is_zero()) continue; // no constraint from this form on the line
    all_zero = false;
    if (r.u.degree() == r.formal_degree) infinity_root = false;
    g = u_gcd(g, r.u);
  }
  if (all_zero)
    throw InternalError("singular locus contains the line z2 = 0 of a reduced curve");
  if (!g.is_zero() && g.degree() > 0) {
    const UPoly sf = detail::u_squarefree_part(g);
    out.count += sf.degree();
    if (want_points)
      for (const Rational& t : detail::u_rational_roots(sf))
        out.rational_points.push_back({t, Rational(1), Rational(0)});
  }
  if (infinity_root) {
    out.count += 1;
    if (want_points)
      out.rational_points.push_back({Rational(1), Rational(0), Rational(0)});
  }
  return out;
}

struct SingularCore {
  int count = 0;
  // unique singular point when count == 1 (always rational by Galois
  // stability of a one-element locus)
  std::optional<std::array<Rational, 3>> unique_point;
};

SingularCore singular_core(const HomPolynomial& f) {
  std::vector<HomPolynomial> partials;
  for (int v = 0; v < 3; ++v) {
    HomPolynomial d = f.partial(v);
    if (!d.is_zero()) partials.push_back(std::move(d));
  }
  if (partials.empty())
    throw InternalError("singular_core: all partials vanish for a nonzero cubic");

  std::vector<BPoly> system;
  for (const auto& q : partials) system.push_back(affine_chart(q));
  const detail::AffineZeros affine = detail::analyze_affine_system(system);
  const LineLocus line = analyze_line_locus(partials, false);

  SingularCore core;
  core.count = affine.count + line.count;
  if (core.count == 1) {
    if (affine.count == 1) {
      // fast path: a single solved component pins the point directly
      const detail::SolvedComponent* comp = nullptr;
      for (const auto& c : affine.components)
        if (detail::a_degy(c.fiber) > 0) comp = &c;
      if (comp != nullptr && !affine.components.empty() &&
          comp->modulus.degree() == 1 && detail::a_degy(comp->fiber) == 1) {
        const Rational x0 = -comp->modulus.coeffs[0];
        const Rational y0 = comp->fiber[0].is_zero() ? Rational(0) : -comp->fiber[0].coeffs[0];
        core.unique_point = {x0, y0, Rational(1)};
      } else {
        const auto pts = detail::rational_affine_zeros(system);
        if (pts.size() != 1)
          throw InternalError("singular_core: unique singular point not rational");
        core.unique_point = {pts[0].x, pts[0].y, Rational(1)};
      }
    } else {
      const LineLocus located = analyze_line_locus(partials, true);
      if (located.rational_points.size() != 1)
        throw InternalError("singular_core: unique singular point on z2 = 0 not rational");
      core.unique_point = located.rational_points[0];
    }
  }
  return core;
}

// coordinate change moving p to [0:0:1] (third column = p)
ProjectiveTransform move_point_last(const std::array<Rational, 3>& p) {
  int pivot = -1;
  for (int i = 0; i < 3; ++i)
    if (p[i] != 0) pivot = i;
  if (pivot < 0) throw InternalError("move_point_last: zero point");
  QMatrix t(3, 3);
  int col = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == pivot) continue;
    t.at(i, col) = 1;
    ++col;
  }
  for (int i = 0; i < 3; ++i) t.at(i, 2) = p[i];
  return ProjectiveTransform(std::move(t));
}

struct LocalData {
  int multiplicity;           // lowest (z0, z1)-degree at [0:0:1]
  Rational cone_discriminant; // of the degree-2 part (valid when mult == 2)
};

LocalData local_data_at_origin(const HomPolynomial& g) {
  int mult = 4;
  for (const auto& [m, c] : g.terms()) mult = std::min(mult, m.exp[0] + m.exp[1]);
  LocalData out{mult, Rational(0)};
  if (mult == 2) {
    Rational a = 0, b = 0, c2 = 0;
    for (const auto& [m, c] : g.terms()) {
      if (m.exp[0] + m.exp[1] != 2) continue;
      if (m.exp[0] == 2) a = c;
      else if (m.exp[0] == 1) b = c;
      else c2 = c;
    }
    out.cone_discriminant = b * b - 4 * a * c2;
  }
  return out;
}

// does some line through [0:0:1] divide g over the algebraic closure?
// Restricting g to the line a z0 + b z1 = 0 gives sum_m s^m t^{3-m} gamma_m(a,b);
// gamma_0 and gamma_1 vanish because [0:0:1] is a singular point of g, so a
// dividing line exists iff the binary forms gamma_2 and gamma_3 share a root.
bool has_line_through_origin_point(const HomPolynomial& g) {
  std::array<UPoly, 2> gammas; // gamma_2, gamma_3 as polys in t = a (b = 1)
  std::array<bool, 2> inf_root{true, true}; // (a:b) = (1:0) root?
  for (int m = 2; m <= 3; ++m) {
    UPoly& u = gammas[m - 2];
    for (const auto& [mono, c] : g.terms()) {
      const int i = mono.exp[0], j = mono.exp[1];
      if (i + j != m) continue;
      // (-b)^i a^j with b = 1: coefficient of a^j picks up (-1)^i
      const Rational coeff = (i % 2 == 0) ? c : -c;
      if (static_cast<int>(u.coeffs.size()) <= j) u.coeffs.resize(j + 1, Rational(0));
      u.coeffs[j] += coeff;
    }
    u.normalize();
    if (u.degree() == m) inf_root[m - 2] = false;
  }
  const UPoly& g2 = gammas[0];
  const UPoly& g3 = gammas[1];
  if (g2.is_zero() && g3.is_zero())
    throw InternalError("line probe: cubic vanishes on every line through the point");
  if (g2.is_zero() || g3.is_zero()) return true; // the nonzero form has roots
  if (inf_root[0] && inf_root[1]) return true;
  return detail::u_gcd(g2, g3).degree() > 0;
}

} // namespace

SingularData singular_data(const HomPolynomial& f) {
  require_cubic(f, "singular_data");
  SingularData out;
  const HomPolynomial g = gcd_partials(f);
  out.repeated_factor_degree = g.degree();
  out.reduced = g.degree() == 0;
  if (!out.reduced) {
    out.singular_count = std::nullopt; // a multiple component is singular throughout
    return out;
  }

  std::vector<HomPolynomial> partials;
  for (int v = 0; v < 3; ++v) {
    HomPolynomial d = f.partial(v);
    if (!d.is_zero()) partials.push_back(std::move(d));
  }
  std::vector<BPoly> system;
  for (const auto& q : partials) system.push_back(affine_chart(q));
  const detail::AffineZeros affine = detail::analyze_affine_system(system);
  const LineLocus line = analyze_line_locus(partials, true);
  out.singular_count = affine.count + line.count;

  for (const auto& pt : detail::rational_affine_zeros(system))
    out.rational_singular_points.push_back(
        canonical_point({pt.x, pt.y, Rational(1)}));
  for (const auto& pt : line.rational_points)
    out.rational_singular_points.push_back(canonical_point(pt));
  return out;
}

CurveType classify(const HomPolynomial& f) {
  require_cubic(f, "classify");

  const HomPolynomial g = gcd_partials(f);
  if (g.degree() == 2) return CurveType::TripleLine;
  if (g.degree() == 1) {
    // f = L^2 M with L = g; confirm the residual line differs from L
    const HomPolynomial residual = divide_exact(f, g.mul(g));
    if (residual.normalized_monic() == g) return CurveType::TripleLine;
    return CurveType::DoubleLinePlusLine;
  }

  const SingularCore core = singular_core(f);
  switch (core.count) {
    case 0:
      return CurveType::SmoothElliptic;
    case 3:
      return CurveType::ThreeLinesGeneral;
    case 2:
      return CurveType::ConicLineGeneral;
    case 1:
      break;
    default:
      throw InternalError("classify: reduced cubic with " +
                          std::to_string(core.count) + " singular points");
  }

  if (!core.unique_point)
    throw InternalError("classify: missing unique singular point");
  const ProjectiveTransform t = move_point_last(*core.unique_point);
  const HomPolynomial moved = apply_transform(f, t);
  const LocalData local = local_data_at_origin(moved);
  if (local.multiplicity == 3) return CurveType::ThreeLinesConcurrent;
  if (local.multiplicity != 2)
    throw InternalError("classify: singular point of multiplicity " +
                        std::to_string(local.multiplicity));

  const bool reducible = has_line_through_origin_point(moved);
  if (local.cone_discriminant != 0) {
    // two distinct tangent directions at the unique singular point
    if (reducible)
      throw InternalError(
          "classify: reducible cubic with one ordinary double point cannot exist");
    return CurveType::Nodal;
  }
  return reducible ? CurveType::ConicLineTangent : CurveType::Cuspidal;
}

} // namespace cubicsym
