// cubicsym command line interface: classify rational plane cubics and
// analyze the symmetry algebra of the associated Poisson structure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cubicsym/errors.hpp"
#include "cubicsym/parser.hpp"
#include "cubicsym/report.hpp"
#include "cubicsym/version.hpp"

namespace {

// exit codes: 0 success, 2 parse failure, 3 precondition failure,
// 4 internal inconsistency, 5 i/o failure
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInternal = 4;
constexpr int kExitIo = 5;

struct Options {
  std::string mode = "both";
  std::string format = "text";
};

cubicsym::ModeSelection selection_or_throw(const std::string& mode) {
  auto selection = cubicsym::mode_selection_from_string(mode);
  if (!selection) throw cubicsym::DomainError("unknown mode: " + mode);
  return *selection;
}

int run_analyze(const std::string& expr, const Options& opt) {
  const cubicsym::HomPolynomial f = cubicsym::parse_polynomial(expr, 3);
  const cubicsym::AnalysisReport report =
      cubicsym::analyze(f, selection_or_throw(opt.mode));
  if (opt.format == "json")
    std::cout << cubicsym::to_json(report).dump(2) << "\n";
  else
    std::cout << cubicsym::to_text(report);
  return 0;
}

int run_classify(const std::string& expr, const Options& opt) {
  const cubicsym::HomPolynomial f = cubicsym::parse_polynomial(expr, 3);
  const cubicsym::CurveType type = cubicsym::classify(f);
  const cubicsym::SingularData data = cubicsym::singular_data(f);
  if (opt.format == "json")
    std::cout << cubicsym::classification_to_json(f, type, data).dump(2) << "\n";
  else
    std::cout << cubicsym::classification_to_text(f, type, data);
  return 0;
}

int run_batch(const std::string& corpus_path, const Options& opt) {
  std::ifstream in(corpus_path);
  if (!in) {
    std::cerr << "error: cannot open corpus file: " << corpus_path << "\n";
    return kExitIo;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto records = cubicsym::parse_corpus(buffer.str());
  const auto selection = selection_or_throw(opt.mode);

  for (const auto& record : records) {
    std::string error_kind, error_message;
    try {
      const cubicsym::HomPolynomial f = cubicsym::parse_polynomial(record.f, 3);
      const cubicsym::AnalysisReport report = cubicsym::analyze(f, selection);
      if (opt.format == "json") {
        nlohmann::ordered_json line;
        line["id"] = record.id;
        nlohmann::ordered_json body = cubicsym::to_json(report);
        for (auto& [key, value] : body.items()) line[key] = std::move(value);
        std::cout << line.dump() << "\n";
      } else {
        std::cout << "== " << record.id << "\n" << cubicsym::to_text(report);
      }
      continue;
    } catch (const cubicsym::ParseError& e) {
      error_kind = "parse";
      error_message = e.what();
    } catch (const cubicsym::DomainError& e) {
      error_kind = "precondition";
      error_message = e.what();
    } catch (const cubicsym::InternalError& e) {
      error_kind = "internal";
      error_message = e.what();
    }
    // record-level failures are isolated: emit an error record and continue
    if (opt.format == "json") {
      nlohmann::ordered_json line;
      line["id"] = record.id;
      line["error"] = {{"kind", error_kind}, {"message", error_message}};
      std::cout << line.dump() << "\n";
    } else {
      std::cout << "== " << record.id << "\nerror (" << error_kind
                << "): " << error_message << "\n";
    }
  }
  return 0;
}

int run_normal_forms(const Options& opt) {
  if (opt.format == "json")
    std::cout << cubicsym::normal_forms_to_json().dump(2) << "\n";
  else
    std::cout << cubicsym::normal_forms_to_text();
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetry algebras and the scalar-curvature obstruction for "
               "Poisson structures given by plane cubics"};
  app.set_version_flag("--version", std::string("cubicsym ") + cubicsym::kVersion);
  app.require_subcommand(1);

  Options opt;
  std::string expr;
  std::string corpus_path;

  auto add_common = [&opt](CLI::App* cmd, bool with_mode) {
    if (with_mode)
      cmd->add_option("--mode", opt.mode, "strict|divisor|both")
          ->check(CLI::IsMember({"strict", "divisor", "both"}));
    cmd->add_option("--format", opt.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "classify a cubic and analyze its symmetry algebra");
  analyze->add_option("expr", expr, "cubic in z0, z1, z2")->required();
  add_common(analyze, true);

  CLI::App* classify =
      app.add_subcommand("classify", "classify a cubic into the nine types");
  classify->add_option("expr", expr, "cubic in z0, z1, z2")->required();
  add_common(classify, false);

  CLI::App* batch =
      app.add_subcommand("batch", "analyze a JSONL corpus of cubics");
  batch->add_option("--corpus", corpus_path, "path to a JSONL corpus file")
      ->required();
  add_common(batch, true);

  CLI::App* normal_forms = app.add_subcommand(
      "normal-forms", "list the nine normal forms in figure order");
  add_common(normal_forms, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(expr, opt);
    if (classify->parsed()) return run_classify(expr, opt);
    if (batch->parsed()) return run_batch(corpus_path, opt);
    if (normal_forms->parsed()) return run_normal_forms(opt);
  } catch (const cubicsym::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const cubicsym::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const cubicsym::InternalError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return 0;
}
