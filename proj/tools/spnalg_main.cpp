#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spnalg/report.hpp"

namespace {

int write_output(const nlohmann::ordered_json &doc, const std::string &table,
                 const std::string &out_path, bool json_to_stdout)
{
  if (json_to_stdout)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << table;

  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open '" << out_path << "' for writing\n";
      return 2;
    }
    out << doc.dump(2) << "\n";
  }
  return 0;
}

int run_cohomology(const std::string &path, const std::string &out_path,
                   bool json_to_stdout)
{
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read '" << path << "'\n";
      return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  spnalg::FiniteAction act = spnalg::FiniteAction::parse(text);
  spnalg::AbelianGroupShape fixed = spnalg::h0(act);
  spnalg::AbelianGroupShape first = spnalg::h1(act);

  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["tool_version"] = spnalg::tool_version;
  doc["input"] = {{"group_order", act.group_order()},
                  {"degree", act.degree()},
                  {"module", act.module().str()}};
  doc["h0"] = fixed.str();
  doc["h1"] = first.str();

  std::ostringstream table;
  table << "group of order " << act.group_order() << " acting on "
        << act.module().str() << "\n";
  table << "H0: " << fixed.str() << "\n";
  table << "H1: " << first.str() << "\n";

  return write_output(doc, table.str(), out_path, json_to_stdout);
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"exact verification suites for the rank-n symplectic Weyl "
               "group, its torus normalizer, quaternionic block groups, "
               "small-group cohomology, and invariant rings"};
  app.fallthrough();

  std::string suite;
  std::optional<int> n;
  int depth = 4;
  int max_degree = 16;
  std::string spec;
  std::string out_path;
  bool json_to_stdout = false;

  std::string names;
  for (const auto &name : spnalg::suite_names())
    names += (names.empty() ? "" : ", ") + name;

  app.add_option("--suite", suite, "suite to run: " + names);
  app.add_option("--n", n,
                 "rank (connectedness, singular-sets, invariants, quillen) "
                 "or block exponent k (stubborn-structure, commutant, "
                 "cohomology-vanishing); each suite has its own default");
  app.add_option("--depth", depth,
                 "dyadic truncation depth for torus and module computations");
  app.add_option("--max-degree", max_degree,
                 "series truncation degree for the invariants suite");
  app.add_option("--spec", spec,
                 "extra group expression for stubborn-structure, e.g. "
                 "'wreath(gamma:1,1)' or 'prod(gamma:0;e:1)'");
  app.add_option("--out", out_path, "write the JSON report to this file");
  app.add_flag("--json", json_to_stdout,
               "print the JSON report to stdout instead of the table");

  auto *coh = app.add_subcommand(
      "cohomology", "H0 and H1 of a finite action read from a text file "
                    "('-' for stdin) in the module/gen/mat format");
  std::string action_path;
  coh->add_option("file", action_path, "action description file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    if (coh->parsed())
      return run_cohomology(action_path, out_path, json_to_stdout);

    if (suite.empty()) {
      std::cerr << "error: --suite is required (one of " << names
                << "), or use the cohomology subcommand\n";
      return 2;
    }

    spnalg::SuiteParams params;
    params.n = n;
    params.depth = depth;
    params.max_degree = max_degree;
    params.spec = spec;

    spnalg::SuiteReport rep = spnalg::run_suite(suite, params);
    int rc = write_output(spnalg::report_json(rep), spnalg::report_table(rep),
                          out_path, json_to_stdout);
    if (rc != 0)
      return rc;
    return rep.all_pass() ? 0 : 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
