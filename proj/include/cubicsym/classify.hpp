#ifndef CUBICSYM_CLASSIFY_HPP
#define CUBICSYM_CLASSIFY_HPP

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "cubicsym/polynomial.hpp"

namespace cubicsym {

/// The nine projective types of a plane cubic, in figure order.
enum class CurveType {
  SmoothElliptic,
  Nodal,
  Cuspidal,
  ConicLineGeneral,
  ConicLineTangent,
  ThreeLinesGeneral,
  ThreeLinesConcurrent,
  DoubleLinePlusLine,
  TripleLine,
};

std::string_view to_string(CurveType t);
std::optional<CurveType> curve_type_from_string(std::string_view name);
const std::array<CurveType, 9>& figure_order();

/// Primitive integer representative with positive first nonzero coordinate.
struct ProjectivePoint {
  std::array<Rational, 3> coords;
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};
ProjectivePoint canonical_point(const std::array<Rational, 3>& coords);

struct SingularData {
  bool reduced;
  int repeated_factor_degree;            // deg gcd_partials, in {0, 1, 2}
  std::optional<int> singular_count;     // distinct points over Qbar; nullopt = infinite
  std::vector<ProjectivePoint> rational_singular_points;
};

/// Exact singular-locus analysis of a nonzero plane cubic. Non-reduced
/// curves short-circuit with an infinite count and no located points.
SingularData singular_data(const HomPolynomial& f);

/// Classifies a nonzero rational plane cubic into one of the nine types.
/// Total on its domain: every unreachable branch raises InternalError
/// rather than guessing. Throws DomainError for f = 0 or wrong degree.
CurveType classify(const HomPolynomial& f);

/// The shipped representative of each type (figure order normal forms).
HomPolynomial normal_form(CurveType t);

} // namespace cubicsym

#endif
