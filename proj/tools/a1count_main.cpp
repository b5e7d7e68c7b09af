// Command-line front end: exact counts of plane curves of degree d meeting a
// fixed smooth cubic at a single primitive contact point, with the full
// table of intermediate contact counts.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "a1count/pipeline.hpp"

namespace {

using namespace a1c;

int env_threads() {
  const char* v = std::getenv("A1COUNT_THREADS");
  if (!v) return 1;
  try {
    int n = std::stoi(v);
    return n < 0 ? 1 : n;
  } catch (...) {
    return 1;
  }
}

Pipeline& pipeline() {
  static Pipeline p(env_threads());
  p.run();
  return p;
}

int cmd_compute(int degree, bool symbolic) {
  Pipeline& p = pipeline();
  const auto& det = p.detail(degree);
  std::cout << "n_" << degree << " = " << p.count(degree) << "\n";
  if (degree == 7)
    std::cout << "  (conditional on the transversality assumption for the degree 5 and 6 "
                 "relation steps)\n";
  std::cout << "  contact point representative: " << det.rep.str() << "\n";
  std::cout << "  model breakdown (weight x count):\n";
  for (const auto& [model, w] : det.weights) {
    const AffineCount& v = det.model_values.at(model);
    std::cout << "    (" << model.str() << ")  " << w << " x "
              << (symbolic ? v.str() : to_int(v.substitute(p.x())).str()) << "\n";
  }
  if (det.engine_value) {
    std::cout << "  relation-table value n(" << degree << ";;): "
              << (symbolic ? det.engine_value->str()
                           : to_int(det.engine_value->substitute(p.x())).str())
              << "\n";
  }
  if (degree >= 6) std::cout << "  resolved unknown x = " << p.x() << "\n";
  return 0;
}

int cmd_table(int e, const std::string& format, bool symbolic) {
  Pipeline& p = pipeline();
  std::vector<std::pair<TangencyKey, AffineCount>> rows;
  for (const auto& [k, v] : p.tables().solved())
    if (k.e == e) rows.emplace_back(k, v);
  auto render = [&](const AffineCount& v) {
    return symbolic || format == "tsv" ? v.str() : to_int(v.substitute(p.x())).str();
  };
  if (format == "text") {
    for (const auto& [k, v] : rows)
      std::cout << std::left << std::setw(28) << k.str() << " " << render(v) << "\n";
  } else if (format == "json") {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [k, v] : rows) obj[k.str()] = render(v);
    std::cout << obj.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "key,value\n";
    for (const auto& [k, v] : rows) std::cout << k.str() << "," << render(v) << "\n";
  } else if (format == "tsv") {
    // fixture format; feeds back into `verify --fixtures`
    for (const auto& [k, v] : rows) std::cout << k.str() << "\t" << v.str() << "\n";
  } else {
    std::cerr << "unknown format: " << format << "\n";
    return 2;
  }
  return 0;
}

int cmd_verify(const std::string& path) {
  Pipeline& p = pipeline();
  std::vector<FixtureEntry> fixtures;
  if (path.empty()) {
    fixtures = parse_fixtures(embedded_fixtures());
  } else {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "cannot open fixtures file: " << path << "\n";
      return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    fixtures = parse_fixtures(buf.str());
  }
  FixtureReport rep = p.verify(fixtures);
  std::cout << "fixtures: " << rep.total << " total, " << rep.checked << " checked, "
            << rep.fixture_only << " fixture-only, " << rep.mismatches.size() << " mismatches\n";
  for (const auto& m : rep.mismatches) std::cout << "  MISMATCH " << m << "\n";
  std::cout << (rep.ok() ? "PASS" : "FAIL") << "\n";
  return rep.ok() ? 0 : 1;
}

int cmd_torsion(int degree, const std::string& coset) {
  auto reps = base_points(degree);
  std::vector<std::pair<CosetRow, TorsionPoint>> wanted;
  for (const auto& [row, P] : reps) {
    std::string name = to_string(row);
    if (coset.empty() || coset == name || (coset == "low" && row == CosetRow::low) ||
        (coset == "high" && row == CosetRow::high))
      wanted.emplace_back(row, P);
  }
  if (wanted.empty()) {
    std::cerr << "no such coset row for degree " << degree << " (use low|high)\n";
    return 2;
  }
  for (const auto& [row, P] : wanted) {
    std::cout << "degree " << degree << ", coset row " << to_string(row) << ", P = " << P.str()
              << "\n";
    long long grand = 0;
    for (const auto& [m, c] : ordered_counts(degree, P)) {
      PlaneClass cls = class_of(m, degree);
      std::cout << "  e=" << cls.e << "  [";
      for (size_t i = 0; i < m.size(); ++i) std::cout << (i ? "," : "") << m[i];
      std::cout << "]  genus " << cls.genus() << "  ordered solutions " << c << "\n";
      grand += c;
    }
    std::cout << "  total ordered solutions: " << grand << "\n";
    std::cout << "  model weights:";
    for (const auto& [model, w] : model_weights(degree, P))
      std::cout << "  (" << model.str() << ")*" << w;
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counts of degree-d plane curves fully tangent to a smooth cubic at one point"};
  app.require_subcommand(1);

  int degree = 4;
  bool symbolic = false;
  auto* compute = app.add_subcommand("compute", "count curves of a given degree");
  compute->add_option("--degree", degree, "curve degree, 1..7")->required()->check(CLI::Range(1, 7));
  compute->add_flag("--symbolic", symbolic, "print values affine in x, before substitution");

  int table_e = 4;
  std::string format = "text";
  bool table_symbolic = false;
  auto* table = app.add_subcommand("table", "print all solved contact counts for one plane degree");
  table->add_option("--e", table_e, "plane degree of the table, 1..6")->required()->check(CLI::Range(1, 6));
  table->add_option("--format", format, "text|json|csv|tsv")->default_val("text");
  table->add_flag("--symbolic", table_symbolic, "print values affine in x");

  std::string fixtures_path;
  auto* verify = app.add_subcommand("verify", "check the table against fixtures");
  verify->add_option("--fixtures", fixtures_path, "fixture file (default: embedded set)");

  int torsion_degree = 4;
  std::string coset;
  auto* torsion = app.add_subcommand("torsion", "ordered torsion solution tables");
  torsion->add_option("--degree", torsion_degree, "curve degree, 1..7")->required()->check(CLI::Range(1, 7));
  torsion->add_option("--coset", coset, "coset row: low|high (default both)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return cmd_compute(degree, symbolic);
    if (table->parsed()) return cmd_table(table_e, format, table_symbolic);
    if (verify->parsed()) return cmd_verify(fixtures_path);
    if (torsion->parsed()) return cmd_torsion(torsion_degree, coset);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
