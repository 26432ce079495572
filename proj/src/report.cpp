#include "cubicsym/report.hpp"

#include <sstream>

#include "cubicsym/errors.hpp"
#include "cubicsym/version.hpp"

namespace cubicsym {

namespace {

constexpr const char* kHypothesisNote =
    "hypothesis: H^1(CP^2, C) = 0, so the reduced automorphism algebra equals "
    "the full one and the reductivity obstruction applies.";
constexpr const char* kModeDisagreementNote =
    "strict and divisor verdicts disagree for this curve; no combined verdict "
    "is reported - see the per-mode results.";
constexpr const char* kTorusExistenceNote =
    "existence: constant scalar curvature structures are known to exist for "
    "three lines in general position (torus-invariant case).";

nlohmann::ordered_json matrix_to_json(const QMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json basis_to_json(const LieSubalgebra& g) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& b : g.basis()) out.push_back(matrix_to_json(b));
  return out;
}

std::string matrix_to_text(const QMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << to_string(m.at(i, j));
    }
  }
  os << "]";
  return os.str();
}

} // namespace

const char* obstruction_string(bool obstructed) {
  return obstructed ? "obstructed" : "not_obstructed_by_this_criterion";
}

std::optional<ModeSelection> mode_selection_from_string(std::string_view flag) {
  if (flag == "strict") return ModeSelection{true, false};
  if (flag == "divisor") return ModeSelection{false, true};
  if (flag == "both") return ModeSelection{true, true};
  return std::nullopt;
}

ModeReport analyze_mode(const HomPolynomial& f, ActionMode mode) {
  Annihilator ann = annihilator(f, mode);
  ReductivityVerdict verdict = is_reductive(ann.algebra);
  ModeReport out{mode,
                 std::move(ann.algebra),
                 std::move(ann.lambdas),
                 false,
                 false,
                 std::move(verdict.radical),
                 std::move(verdict.center),
                 verdict.reductive,
                 !verdict.reductive};
  out.abelian = is_abelian(out.algebra);
  out.solvable = is_solvable(out.algebra);
  return out;
}

AnalysisReport analyze(const HomPolynomial& f, const ModeSelection& modes) {
  if (!modes.strict && !modes.divisor)
    throw DomainError("analyze: at least one mode must be selected");
  AnalysisReport report;
  report.input = f.render();
  report.curve_type = classify(f);
  if (modes.strict) report.strict = analyze_mode(f, ActionMode::Strict);
  if (modes.divisor) report.divisor = analyze_mode(f, ActionMode::Divisor);

  report.annotations.push_back(kHypothesisNote);
  if (report.strict && report.divisor &&
      report.strict->reductive != report.divisor->reductive)
    report.annotations.push_back(kModeDisagreementNote);
  if (report.curve_type == CurveType::ThreeLinesGeneral)
    report.annotations.push_back(kTorusExistenceNote);
  return report;
}

namespace {

nlohmann::ordered_json mode_to_json(const ModeReport& m) {
  nlohmann::ordered_json out;
  out["dimension"] = m.algebra.dim();
  out["basis"] = basis_to_json(m.algebra);
  if (m.mode == ActionMode::Divisor) {
    nlohmann::ordered_json lambdas = nlohmann::ordered_json::array();
    for (const auto& l : m.lambdas) lambdas.push_back(to_string(l));
    out["lambdas"] = std::move(lambdas);
  }
  out["is_abelian"] = m.abelian;
  out["is_solvable"] = m.solvable;
  out["radical"] = {{"dimension", m.radical.dim()}, {"basis", basis_to_json(m.radical)}};
  out["center"] = {{"dimension", m.center.dim()}, {"basis", basis_to_json(m.center)}};
  out["is_reductive"] = m.reductive;
  out["obstruction"] = obstruction_string(m.obstructed);
  return out;
}

} // namespace

nlohmann::ordered_json to_json(const AnalysisReport& report) {
  nlohmann::ordered_json out;
  out["input"] = report.input;
  out["curve_type"] = std::string(to_string(report.curve_type));
  nlohmann::ordered_json modes;
  if (report.strict) modes["strict"] = mode_to_json(*report.strict);
  if (report.divisor) modes["divisor"] = mode_to_json(*report.divisor);
  out["modes"] = std::move(modes);
  if (report.strict && !report.divisor)
    out["obstruction"] = obstruction_string(report.strict->obstructed);
  if (report.divisor && !report.strict)
    out["obstruction"] = obstruction_string(report.divisor->obstructed);
  out["annotations"] = report.annotations;
  return out;
}

namespace {

void mode_to_text(std::ostringstream& os, const ModeReport& m) {
  const char* tag = to_string(m.mode);
  os << "[" << tag << "] dimension: " << m.algebra.dim() << "\n";
  os << "[" << tag << "] basis:";
  if (m.algebra.dim() == 0) os << " (empty)";
  os << "\n";
  for (std::size_t k = 0; k < m.algebra.dim(); ++k) {
    os << "  " << matrix_to_text(m.algebra.basis()[k]);
    if (m.mode == ActionMode::Divisor)
      os << "   lambda = " << to_string(m.lambdas[k]);
    os << "\n";
  }
  os << "[" << tag << "] abelian: " << (m.abelian ? "yes" : "no")
     << ", solvable: " << (m.solvable ? "yes" : "no") << "\n";
  os << "[" << tag << "] radical dimension: " << m.radical.dim() << "\n";
  for (const auto& b : m.radical.basis()) os << "  " << matrix_to_text(b) << "\n";
  os << "[" << tag << "] center dimension: " << m.center.dim() << "\n";
  for (const auto& b : m.center.basis()) os << "  " << matrix_to_text(b) << "\n";
  os << "[" << tag << "] reductive: " << (m.reductive ? "yes" : "no") << "\n";
  os << "[" << tag << "] obstruction: " << obstruction_string(m.obstructed) << "\n";
}

} // namespace

std::string to_text(const AnalysisReport& report) {
  std::ostringstream os;
  os << "# cubicsym " << kVersion << "\n";
  os << "input: " << report.input << "\n";
  os << "curve type: " << to_string(report.curve_type) << "\n";
  if (report.strict) mode_to_text(os, *report.strict);
  if (report.divisor) mode_to_text(os, *report.divisor);
  for (const auto& note : report.annotations) os << "note: " << note << "\n";
  return os.str();
}

nlohmann::ordered_json classification_to_json(const HomPolynomial& f,
                                              CurveType type,
                                              const SingularData& data) {
  nlohmann::ordered_json out;
  out["input"] = f.render();
  out["curve_type"] = std::string(to_string(type));
  nlohmann::ordered_json singular;
  singular["reduced"] = data.reduced;
  singular["repeated_factor_degree"] = data.repeated_factor_degree;
  if (data.singular_count)
    singular["singular_count"] = *data.singular_count;
  else
    singular["singular_count"] = "infinite";
  nlohmann::ordered_json points = nlohmann::ordered_json::array();
  for (const auto& p : data.rational_singular_points) {
    nlohmann::ordered_json triple = nlohmann::ordered_json::array();
    for (const auto& c : p.coords) triple.push_back(to_string(c));
    points.push_back(std::move(triple));
  }
  singular["rational_singular_points"] = std::move(points);
  out["singular"] = std::move(singular);
  return out;
}

std::string classification_to_text(const HomPolynomial& f, CurveType type,
                                   const SingularData& data) {
  std::ostringstream os;
  os << "# cubicsym " << kVersion << "\n";
  os << "input: " << f.render() << "\n";
  os << "curve type: " << to_string(type) << "\n";
  os << "reduced: " << (data.reduced ? "yes" : "no") << "\n";
  os << "repeated factor degree: " << data.repeated_factor_degree << "\n";
  os << "singular points over closure: ";
  if (data.singular_count)
    os << *data.singular_count;
  else
    os << "infinite";
  os << "\n";
  os << "rational singular points:";
  if (data.rational_singular_points.empty()) os << " (none)";
  os << "\n";
  for (const auto& p : data.rational_singular_points)
    os << "  [" << to_string(p.coords[0]) << " : " << to_string(p.coords[1])
       << " : " << to_string(p.coords[2]) << "]\n";
  return os.str();
}

nlohmann::ordered_json normal_forms_to_json() {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  const auto& order = figure_order();
  for (std::size_t i = 0; i < order.size(); ++i) {
    nlohmann::ordered_json rec;
    rec["figure"] = i + 1;
    rec["curve_type"] = std::string(to_string(order[i]));
    rec["f"] = normal_form(order[i]).render();
    out.push_back(std::move(rec));
  }
  return out;
}

std::string normal_forms_to_text() {
  std::ostringstream os;
  os << "# cubicsym " << kVersion << "\n";
  const auto& order = figure_order();
  for (std::size_t i = 0; i < order.size(); ++i)
    os << "Figure " << i + 1 << "  " << to_string(order[i]) << "  "
       << normal_form(order[i]).render() << "\n";
  return os.str();
}

std::vector<CorpusRecord> parse_corpus(const std::string& text) {
  std::vector<CorpusRecord> records;
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue; // blank line
    nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.is_object() || !rec.contains("id") ||
        !rec.contains("f") || !rec["id"].is_string() || !rec["f"].is_string())
      throw ParseError("malformed corpus record on line " + std::to_string(lineno),
                       lineno);
    records.push_back(CorpusRecord{rec["id"].get<std::string>(),
                                   rec["f"].get<std::string>()});
  }
  return records;
}

} // namespace cubicsym
