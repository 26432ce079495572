// Acceptance suite: runs every release criterion at its stated tolerance
// (all exact, zero tolerance) and prints one PASS/FAIL line per criterion.
// Exits with the number of failed criteria.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cubicsym/action.hpp"
#include "cubicsym/classify.hpp"
#include "cubicsym/errors.hpp"
#include "cubicsym/parser.hpp"
#include "cubicsym/report.hpp"
#include "schema_check.hpp"
#include "test_helpers.hpp"

using namespace cubicsym;
using testutil::conjugate_basis;
using testutil::diag3;
using testutil::Rng;
using testutil::unit;

namespace {

struct Criterion {
  int number;
  std::string description;
  std::vector<std::string> failures;

  void expect(bool condition, const std::string& message) {
    if (!condition) failures.push_back(message);
  }
};

HomPolynomial p3(const std::string& text) { return parse_polynomial(text, 3); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string run_command(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + command);
  std::string output;
  char chunk[4096];
  std::size_t n;
  while ((n = fread(chunk, 1, sizeof chunk, pipe)) > 0) output.append(chunk, n);
  if (pclose(pipe) != 0)
    throw std::runtime_error("command failed: " + command);
  return output;
}

LieSubalgebra sl_n(std::size_t n) {
  std::vector<QMatrix> basis;
  for (const auto& e : sl_basis(n)) basis.push_back(e.matrix);
  return LieSubalgebra::from_basis(n, std::move(basis));
}

void criterion_1(Criterion& c) {
  const Annihilator ann = annihilator(p3("z0^3"), ActionMode::Strict);
  c.expect(ann.algebra.dim() == 5, "dimension != 5");
  const auto row0_zero = LieSubalgebra::from_basis(
      3, {unit(3, 1, 0), unit(3, 1, 2), unit(3, 2, 0), unit(3, 2, 1),
          diag3(0, 1, -1)});
  c.expect(ann.algebra.same_subspace(row0_zero),
           "kernel differs from {a in sl(3) : row 0 = 0}");
  const ReductivityVerdict verdict = is_reductive(ann.algebra);
  c.expect(!verdict.reductive, "expected not reductive");
  c.expect(verdict.radical.dim() == 2, "radical dimension != 2");
  c.expect(verdict.radical.dim() != ann.algebra.dim(),
           "radical must not be the whole algebra");
  const auto expected_radical =
      LieSubalgebra::from_basis(3, {unit(3, 1, 0), unit(3, 2, 0)});
  c.expect(verdict.radical.same_subspace(expected_radical),
           "radical differs from span{E10, E20}");
  c.expect(ann.algebra.dim() - verdict.radical.dim() == 3,
           "quotient is not 3-dimensional (sl(2)-type)");
}

void criterion_2(Criterion& c) {
  const Annihilator ann = annihilator(p3("z0*z1^2"), ActionMode::Strict);
  c.expect(ann.algebra.dim() == 3, "dimension != 3");
  const auto expected = LieSubalgebra::from_basis(
      3, {diag3(-2, 1, 1), unit(3, 2, 0), unit(3, 2, 1)});
  c.expect(ann.algebra.same_subspace(expected),
           "kernel differs from span{diag(-2,1,1), E20, E21}");
  c.expect(is_solvable(ann.algebra), "expected solvable");
  const ReductivityVerdict verdict = is_reductive(ann.algebra);
  const auto expected_center = LieSubalgebra::from_basis(3, {unit(3, 2, 1)});
  c.expect(verdict.center.same_subspace(expected_center),
           "center differs from span{E21}");
  c.expect(!verdict.reductive, "expected not reductive");
}

void criterion_3(Criterion& c) {
  const HomPolynomial f = p3("z0*z1*(z0+z1)");
  const Annihilator strict = annihilator(f, ActionMode::Strict);
  const auto displayed =
      LieSubalgebra::from_basis(3, {unit(3, 2, 0), unit(3, 2, 1)});
  c.expect(strict.algebra.dim() == 2, "strict dimension != 2");
  c.expect(strict.algebra.same_subspace(displayed),
           "strict kernel differs from span{E20, E21}");
  c.expect(is_abelian(strict.algebra), "strict kernel not abelian");
  c.expect(is_reductive(strict.algebra).reductive,
           "strict kernel should be reductive");

  const Annihilator divisor = annihilator(f, ActionMode::Divisor);
  c.expect(divisor.algebra.dim() == 3, "divisor dimension != 3");
  c.expect(!is_abelian(divisor.algebra), "divisor kernel should be nonabelian");
  c.expect(is_solvable(divisor.algebra), "divisor kernel should be solvable");
  c.expect(!is_reductive(divisor.algebra).reductive,
           "divisor kernel should not be reductive");

  const AnalysisReport report = analyze(f);
  bool has_note = false;
  for (const auto& note : report.annotations)
    if (note.find("disagree") != std::string::npos) has_note = true;
  c.expect(has_note, "report lacks the mode-disagreement annotation");
}

void criterion_4(Criterion& c) {
  const std::vector<std::pair<std::string, std::size_t>> fixtures = {
      {"z0^3 + z1^3 + z2^3", 0},
      {"-z0^3 - z0^2*z2 + z1^2*z2", 0},
      {"-z0^3 + z1^2*z2", 0},
      {"z2*(z0^2 + z1^2 - z2^2)", 1},           // pinned by the kernel oracle
      {"(z1 - z2)*(z0^2 + z1^2 - z2^2)", 1},    // pinned by the kernel oracle
      {"z0*z1*z2", 2},
  };
  for (const auto& [text, dim] : fixtures) {
    const Annihilator ann = annihilator(p3(text), ActionMode::Strict);
    c.expect(ann.algebra.dim() == dim,
             text + ": strict dimension " + std::to_string(ann.algebra.dim()) +
                 " != " + std::to_string(dim));
    c.expect(is_abelian(ann.algebra), text + ": kernel not abelian");
    c.expect(is_reductive(ann.algebra).reductive, text + ": not reductive");
  }
}

void criterion_5(Criterion& c) {
  Rng rng(520123);
  int cases = 0, failures = 0;
  for (CurveType t : figure_order()) {
    const HomPolynomial f = normal_form(t);
    if (classify(f) != t) {
      c.expect(false, std::string("normal form misclassified: ") +
                          std::string(to_string(t)));
      continue;
    }
    for (int k = 0; k < 50; ++k) {
      const ProjectiveTransform g = rng.invertible3();
      ++cases;
      if (classify(apply_transform(f, g)) != t) {
        ++failures;
        c.expect(false, std::string(to_string(t)) + ": conjugate #" +
                            std::to_string(k) + " misclassified");
      }
    }
  }
  c.expect(cases == 450, "expected 450 conjugate cases");
  c.expect(failures == 0, std::to_string(failures) + " conjugate failures");
}

void criterion_6(Criterion& c) {
  Rng rng(602311);
  const auto& order = figure_order();
  for (int iter = 0; iter < 100; ++iter) {
    const HomPolynomial f = normal_form(order[iter % order.size()]);
    const ProjectiveTransform g = rng.invertible3();
    const Annihilator transformed =
        annihilator(apply_transform(f, g), ActionMode::Strict);
    const Annihilator original = annihilator(f, ActionMode::Strict);
    const LieSubalgebra conjugated = LieSubalgebra::span(
        3, conjugate_basis(original.algebra.basis(), g.matrix()));
    if (!transformed.algebra.same_subspace(conjugated))
      c.expect(false, "equivariance failure at iteration " + std::to_string(iter));
  }
}

void criterion_7(Criterion& c) {
  std::vector<std::pair<std::string, LieSubalgebra>> algebras;
  for (CurveType t : figure_order()) {
    const HomPolynomial f = normal_form(t);
    algebras.emplace_back(std::string(to_string(t)) + "/strict",
                          annihilator(f, ActionMode::Strict).algebra);
    algebras.emplace_back(std::string(to_string(t)) + "/divisor",
                          annihilator(f, ActionMode::Divisor).algebra);
  }
  algebras.emplace_back("sl(2)", sl_n(2));
  algebras.emplace_back("sl(3)", sl_n(3));

  for (const auto& [name, g] : algebras) {
    const std::size_t d = g.dim();
    // Jacobi identity on structure constants, exactly
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          for (std::size_t l = 0; l < d; ++l) {
            Rational sum = 0;
            for (std::size_t m = 0; m < d; ++m)
              sum += g.structure_constant(i, j, m) * g.structure_constant(m, k, l) +
                     g.structure_constant(j, k, m) * g.structure_constant(m, i, l) +
                     g.structure_constant(k, i, m) * g.structure_constant(m, j, l);
            if (sum != 0) c.expect(false, name + ": Jacobi identity failed");
          }
    try {
      // triple certificate runs inside radical(); re-verify the visible parts
      const LieSubalgebra rad = radical(g);
      const LieSubalgebra cen = center(g);
      for (const auto& z : cen.basis())
        if (!rad.contains(z)) c.expect(false, name + ": center not inside radical");
      if (!is_solvable(rad)) c.expect(false, name + ": radical not solvable");
      for (const auto& b : g.basis())
        for (const auto& r : rad.basis())
          if (!rad.contains(bracket(b, r)))
            c.expect(false, name + ": radical not an ideal");
    } catch (const InternalError& e) {
      c.expect(false, name + ": radical certificate threw: " + e.what());
    }
    // Killing invariance on all basis triples
    const QMatrix kf = killing_form(g);
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y)
        for (std::size_t z = 0; z < d; ++z) {
          Rational sum = 0;
          for (std::size_t m = 0; m < d; ++m)
            sum += g.structure_constant(x, y, m) * kf.at(m, z) +
                   g.structure_constant(x, z, m) * kf.at(y, m);
          if (sum != 0) c.expect(false, name + ": Killing invariance failed");
        }
  }
}

void criterion_8(Criterion& c) {
  Rng rng(808080);
  for (int iter = 0; iter < 200; ++iter) {
    const QMatrix a = rng.traceless3();
    const QMatrix b = rng.traceless3();
    const HomPolynomial f = rng.homogeneous(3, 3);
    const HomPolynomial lhs = act(bracket(a, b), f);
    const HomPolynomial rhs = act(a, act(b, f)).sub(act(b, act(a, f)));
    if (lhs != rhs)
      c.expect(false, "homomorphism identity failed at iteration " +
                          std::to_string(iter));
  }
}

void criterion_9(Criterion& c) {
  const HomPolynomial f = p3("z0^3");
  const std::vector<std::array<Rational, 3>> on_curve = {
      {0, 1, 0}, {0, 0, 1}, {0, 1, 1}, {0, 1, -1}, {0, 2, 1}};
  const std::vector<std::array<Rational, 3>> off_curve = {
      {1, 0, 0}, {1, 1, 1}, {1, 1, 0}, {1, 0, 1}, {2, 1, -1}};
  for (const auto& point : on_curve)
    c.expect(type_number(f, point) == 2, "expected type 2 on the curve");
  for (const auto& point : off_curve)
    c.expect(type_number(f, point) == 0, "expected type 0 off the curve");
}

void criterion_10(Criterion& c, const std::string& cli, const std::string& data_dir) {
  const std::string command =
      cli + " batch --corpus " + data_dir + "/corpus.jsonl --format json";
  const std::string first = run_command(command);
  const std::string second = run_command(command);
  c.expect(first == second, "batch output is not byte-identical across runs");

  const auto schema = nlohmann::json::parse(read_file(data_dir + "/report.schema.json"));
  const schemacheck::Validator validator(schema);

  std::vector<nlohmann::json> reports;
  std::istringstream lines(first);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    reports.push_back(nlohmann::json::parse(line));
  }
  c.expect(reports.size() == 9, "expected nine reports, got " +
                                    std::to_string(reports.size()));

  std::set<std::string> strict_obstructed, divisor_obstructed;
  for (const auto& report : reports) {
    if (const auto err = validator.validate(report)) {
      c.expect(false, "schema violation: " + *err);
      continue;
    }
    const std::string type = report["curve_type"].get<std::string>();
    if (report["modes"]["strict"]["obstruction"] == "obstructed")
      strict_obstructed.insert(type);
    if (report["modes"]["divisor"]["obstruction"] == "obstructed")
      divisor_obstructed.insert(type);
  }

  const std::set<std::string> expected_strict{"DoubleLinePlusLine", "TripleLine"};
  const std::set<std::string> expected_divisor{
      "ThreeLinesConcurrent", "DoubleLinePlusLine", "TripleLine"};
  auto set_to_string = [](const std::set<std::string>& s) {
    std::string out = "{";
    for (const auto& x : s) out += (out.size() > 1 ? ", " : "") + x;
    return out + "}";
  };
  c.expect(strict_obstructed == expected_strict,
           "strict obstructed set is " + set_to_string(strict_obstructed) +
               ", spec requires " + set_to_string(expected_strict));
  c.expect(divisor_obstructed == expected_divisor,
           "divisor obstructed set is " + set_to_string(divisor_obstructed) +
               ", spec requires " + set_to_string(expected_divisor) +
               " (the tangent conic-line divisor kernel is a 2-dimensional "
               "nonabelian Borel-type algebra, hence not reductive, so this "
               "clause cannot hold; see the analysis notes)");
}

} // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

  std::vector<Criterion> criteria = {
      {1, "triple line strict kernel, radical span{E10,E20}, not reductive", {}},
      {2, "double line strict kernel span{diag(-2,1,1),E20,E21}, center span{E21}", {}},
      {3, "concurrent lines: strict abelian/reductive vs divisor nonabelian", {}},
      {4, "figures 1-6 strict dimensions 0,0,0,1,1,2, all abelian reductive", {}},
      {5, "classifier totality: 9 tags + 450 random conjugates", {}},
      {6, "equivariance of strict kernels under 100 random transforms", {}},
      {7, "structure-theory certificates across the algebra zoo", {}},
      {8, "action homomorphism identity on 200 random triples", {}},
      {9, "type number 2 on the curve, 0 off it (5 + 5 points)", {}},
      {10, "CLI batch: schema-valid, byte-identical, obstructed sets", {}},
  };

  try {
    criterion_1(criteria[0]);
    criterion_2(criteria[1]);
    criterion_3(criteria[2]);
    criterion_4(criteria[3]);
    criterion_5(criteria[4]);
    criterion_6(criteria[5]);
    criterion_7(criteria[6]);
    criterion_8(criteria[7]);
    criterion_9(criteria[8]);
    if (cli.empty()) {
      criteria[9].expect(false, "--cli <path to cubicsym binary> not given");
    } else {
      criterion_10(criteria[9], cli, CUBICSYM_DATA_DIR);
    }
  } catch (const std::exception& e) {
    std::cerr << "acceptance suite aborted: " << e.what() << "\n";
    return 99;
  }

  int failed = 0;
  for (const auto& criterion : criteria) {
    if (criterion.failures.empty()) {
      std::cout << "PASS criterion " << criterion.number << ": "
                << criterion.description << "\n";
    } else {
      ++failed;
      std::cout << "FAIL criterion " << criterion.number << ": "
                << criterion.description << "\n";
      for (const auto& message : criterion.failures)
        std::cout << "     - " << message << "\n";
    }
  }
  std::cout << (failed == 0 ? "all criteria passed"
                            : std::to_string(failed) + " criterion(s) failed")
            << "\n";
  return failed;
}
