#ifndef CUBICSYM_REPORT_HPP
#define CUBICSYM_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubicsym/action.hpp"
#include "cubicsym/classify.hpp"

namespace cubicsym {

/// Structure analysis of the symmetry algebra in one mode.
struct ModeReport {
  ActionMode mode;
  LieSubalgebra algebra;
  std::vector<Rational> lambdas; // divisor mode eigenvalues, one per basis element
  bool abelian;
  bool solvable;
  LieSubalgebra radical;
  LieSubalgebra center;
  bool reductive;
  bool obstructed; // not reductive => no csc structure of symplectic type
};

struct AnalysisReport {
  std::string input; // canonical rendering of the cubic
  CurveType curve_type;
  std::optional<ModeReport> strict;
  std::optional<ModeReport> divisor;
  std::vector<std::string> annotations;
};

struct ModeSelection {
  bool strict = true;
  bool divisor = true;
};
std::optional<ModeSelection> mode_selection_from_string(std::string_view flag);

ModeReport analyze_mode(const HomPolynomial& f, ActionMode mode);

/// Full analysis: classification, per-mode structure theory, obstruction
/// verdicts and annotations. When both modes are selected and their
/// verdicts disagree, no combined verdict is synthesized; the annotation
/// records the disagreement and each mode block carries its own verdict.
AnalysisReport analyze(const HomPolynomial& f, const ModeSelection& modes = {});

nlohmann::ordered_json to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

nlohmann::ordered_json classification_to_json(const HomPolynomial& f,
                                              CurveType type,
                                              const SingularData& data);
std::string classification_to_text(const HomPolynomial& f, CurveType type,
                                   const SingularData& data);

nlohmann::ordered_json normal_forms_to_json();
std::string normal_forms_to_text();

/// One line of a batch corpus: {"id": ..., "f": ...}.
struct CorpusRecord {
  std::string id;
  std::string f;
};
/// Parses JSONL corpus text; throws ParseError on malformed records.
std::vector<CorpusRecord> parse_corpus(const std::string& text);

const char* obstruction_string(bool obstructed);

} // namespace cubicsym

#endif
