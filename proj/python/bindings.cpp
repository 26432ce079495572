// pybind11 bindings for the cubicsym core: parsing/rendering, curve
// classification, symmetry-algebra computation and full analysis reports.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cubicsym/action.hpp"
#include "cubicsym/classify.hpp"
#include "cubicsym/errors.hpp"
#include "cubicsym/parser.hpp"
#include "cubicsym/report.hpp"
#include "cubicsym/version.hpp"

namespace py = pybind11;

namespace {

using namespace cubicsym;

HomPolynomial parse3(const std::string& expr) { return parse_polynomial(expr, 3); }

ActionMode mode_from(const std::string& mode) {
  if (mode == "strict") return ActionMode::Strict;
  if (mode == "divisor") return ActionMode::Divisor;
  throw DomainError("mode must be 'strict' or 'divisor', got '" + mode + "'");
}

std::vector<std::vector<std::string>> matrix_out(const QMatrix& m) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

QMatrix matrix_in(const std::vector<std::vector<std::string>>& rows) {
  const std::size_t n = rows.size();
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw DomainError("matrix rows must be square");
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = rational_from_string(rows[i][j]);
  }
  return m;
}

std::vector<std::vector<std::vector<std::string>>> basis_out(const LieSubalgebra& g) {
  std::vector<std::vector<std::vector<std::string>>> out;
  for (const auto& b : g.basis()) out.push_back(matrix_out(b));
  return out;
}

ModeSelection selection_from(const std::string& mode) {
  auto selection = mode_selection_from_string(mode);
  if (!selection)
    throw DomainError("mode must be 'strict', 'divisor' or 'both', got '" + mode + "'");
  return *selection;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact symmetry algebras of plane-cubic Poisson structures and "
            "the constant-scalar-curvature obstruction";

  py::register_exception<ParseError>(m, "CubicParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "CubicDomainError", PyExc_ValueError);
  py::register_exception<InternalError>(m, "CubicInternalError", PyExc_RuntimeError);

  m.attr("__version__") = kVersion;

  m.def(
      "render", [](const std::string& expr) { return parse3(expr).render(); },
      py::arg("expr"),
      "Parse a cubic expression in z0, z1, z2 and return its canonical "
      "graded-lex rendering.");

  m.def(
      "classify",
      [](const std::string& expr) { return std::string(to_string(classify(parse3(expr)))); },
      py::arg("expr"), "Curve type tag of a nonzero rational plane cubic.");

  m.def(
      "classify_json",
      [](const std::string& expr) {
        const HomPolynomial f = parse3(expr);
        return classification_to_json(f, classify(f), singular_data(f)).dump();
      },
      py::arg("expr"),
      "Classification plus exact singular data, as a JSON string.");

  m.def(
      "analyze_json",
      [](const std::string& expr, const std::string& mode) {
        return to_json(analyze(parse3(expr), selection_from(mode))).dump();
      },
      py::arg("expr"), py::arg("mode") = "both",
      "Full analysis report (classification, per-mode symmetry algebra "
      "structure, obstruction verdicts, annotations) as a JSON string.");

  m.def(
      "analyze_text",
      [](const std::string& expr, const std::string& mode) {
        return to_text(analyze(parse3(expr), selection_from(mode)));
      },
      py::arg("expr"), py::arg("mode") = "both",
      "Full analysis report in the deterministic text format.");

  m.def("normal_forms_json", [] { return normal_forms_to_json().dump(); },
        "The nine normal forms in figure order, as a JSON string.");

  m.def(
      "annihilator_basis",
      [](const std::string& expr, const std::string& mode) {
        return basis_out(annihilator(parse3(expr), mode_from(mode)).algebra);
      },
      py::arg("expr"), py::arg("mode") = "strict",
      "Basis of the symmetry algebra, matrices with 'p/q' string entries.");

  m.def(
      "annihilator_dimension",
      [](const std::string& expr, const std::string& mode) {
        return annihilator(parse3(expr), mode_from(mode)).algebra.dim();
      },
      py::arg("expr"), py::arg("mode") = "strict");

  m.def(
      "is_reductive",
      [](const std::string& expr, const std::string& mode) {
        return is_reductive(annihilator(parse3(expr), mode_from(mode)).algebra)
            .reductive;
      },
      py::arg("expr"), py::arg("mode") = "strict",
      "Whether the symmetry algebra's radical equals its center.");

  m.def(
      "act",
      [](const std::vector<std::vector<std::string>>& a, const std::string& expr) {
        return act(matrix_in(a), parse3(expr)).render();
      },
      py::arg("matrix"), py::arg("expr"),
      "Action of a 3x3 matrix (string entries) on a cubic; canonical text.");

  m.def(
      "type_number",
      [](const std::string& expr, const std::string& p0, const std::string& p1,
         const std::string& p2) {
        return type_number(parse3(expr),
                           {rational_from_string(p0), rational_from_string(p1),
                            rational_from_string(p2)});
      },
      py::arg("expr"), py::arg("p0"), py::arg("p1"), py::arg("p2"),
      "Pointwise type number: 2 on the cubic, 0 elsewhere.");
}
