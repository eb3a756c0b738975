// Command-line surface for the filiform Lie algebra library: check law
// files, compute invariants, generate parametric families and constraint
// systems, and rerun the fixture reproductions.
//
// Exit codes: 0 success, 1 mathematical failure, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "filiform/json_io.hpp"

using namespace filiform;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMath = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& text, const std::string& export_path) {
  if (export_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(export_path);
  if (!out)
    throw Error("cannot write " + export_path);
  out << text;
}

int cmd_check(const std::string& path) {
  StructureConstants law = parse_law_text(read_file(path));
  auto failure = find_jacobi_failure(law);
  bool lie = !failure.has_value();
  std::cout << "antisymmetry: yes (structural: only i < j pairs are stored)\n";
  std::cout << "lie: " << (lie ? "yes" : "no") << "\n";
  if (failure)
    std::cout << "jacobi defect at (" << failure->i << "," << failure->j << "," << failure->k
              << "): " << qvec_str(failure->defect) << "\n";
  std::cout << "filiform: " << (is_filiform(law) ? "yes" : "no") << "\n";
  std::cout << "adapted: " << (is_adapted(law) ? "yes" : "no") << "\n";
  return lie ? kExitOk : kExitMath;
}

int cmd_invariants(const std::string& path) {
  StructureConstants law = parse_law_text(read_file(path));
  if (!is_filiform(law)) {
    int n = law.dim();
    std::string reason = "not a Lie algebra";
    if (is_lie(law)) {
      auto series = lower_central_series(law);
      for (int k = 2; k <= n; ++k)
        if (static_cast<int>(series.at(k).dim()) != n - k) {
          reason = "dim C^" + std::to_string(k) + " = " + std::to_string(series.at(k).dim()) +
                   ", expected " + std::to_string(n - k);
          break;
        }
    }
    std::cerr << "not filiform: " << reason << "\n";
    return kExitMath;
  }
  nlohmann::json out;
  if (is_model(law)) {
    out["model"] = true;
  } else {
    Triple t = invariants_adapted(law);
    out["triple"] = {{"z1", t.z1}, {"z2", t.z2}, {"n", t.n}};
  }
  out["theta"] = theta_vector(law).entries;
  out["hp"] = bipoly_json(hilbert_polynomial(law));
  out["hp2"] = bipoly_json(hp2(law));
  nlohmann::json estar = nlohmann::json::array();
  for (const auto& [k, l] : support_estar(law))
    estar.push_back(nlohmann::json::array({k, l}));
  out["Estar"] = std::move(estar);
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_generate(const std::string& path, bool constraints, const std::string& export_path,
                 const std::string& format) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  FamilyRequest req = request_from_json(j);
  if (constraints) {
    if (!req.symbolic)
      throw ParseError("--constraints needs a symbolic request "
                       "(numeric laws reduce to a plain Jacobi check; use `check`)");
    ParamLaw law{req.spec, req.values, build_law(req.spec, req.values)};
    ConstraintSet cs = jacobi_constraints(law);
    if (format == "json")
      write_output(constraints_json(cs).dump(2) + "\n", export_path);
    else
      write_output(constraints_text(cs), export_path);
    return kExitOk;
  }
  if (req.symbolic)
    throw ParseError("symbolic request without --constraints; "
                     "give numeric values to emit a law file");
  StructureConstants law = build_law(req.spec, numeric_values(req.values));
  write_output(law_to_text(law), export_path);
  return kExitOk;
}

int cmd_reproduce(const std::string& case_id, std::uint64_t seed, int samples, int jobs,
                  const std::string& format, const std::string& export_path) {
  std::vector<Report> reports;
  if (case_id == "all") {
    for (const char* id : {"4-5-8", "5-6-9", "5-7-10"})
      reports.push_back(reproduce(id, seed, samples, jobs));
    reports.push_back(reproduce_z2eq(seed));
  } else if (case_id == "z2eq") {
    reports.push_back(reproduce_z2eq(seed));
  } else {
    reports.push_back(reproduce(case_id, seed, samples, jobs));
  }
  bool pass = true;
  std::ostringstream os;
  nlohmann::json json_out = nlohmann::json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass;
    os << r.table();
    json_out.push_back(report_json(r));
  }
  if (format == "json")
    write_output(json_out.dump(2) + "\n", export_path);
  else
    write_output(os.str(), export_path);
  return pass ? kExitOk : kExitMath;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of filiform nilpotent Lie algebras"};
  app.require_subcommand(1);

  std::string path;
  std::string format = "table";
  std::string export_path;
  std::uint64_t seed = 1;
  int samples = 3;
  int jobs = 1;
  bool constraints = false;

  auto* check = app.add_subcommand("check", "verify antisymmetry/Jacobi/filiform/adapted");
  check->add_option("file", path, "law file (JSON)")->required();

  auto* invariants =
      app.add_subcommand("invariants", "triple, theta vector, HP, HP^(2) and E* of a law");
  invariants->add_option("file", path, "law file (JSON)")->required();

  auto* generate = app.add_subcommand("generate", "build a parametric law or its constraints");
  generate->add_option("request", path, "family request (JSON)")->required();
  generate->add_flag("--constraints", constraints, "emit the Jacobi constraint system");
  generate->add_option("--export", export_path, "write output to a file");
  generate->add_option("--format", format, "json|table output (constraints: json|text)");

  auto* repro = app.add_subcommand("reproduce", "rerun the fixture reproductions");
  repro->add_option("case", path, "4-5-8 | 5-6-9 | 5-7-10 | z2eq | all")->required();
  repro->add_option("--seed", seed, "sampling seed");
  repro->add_option("--samples", samples, "points per stratum");
  repro->add_option("--jobs", jobs, "parallel workers for independent strata");
  repro->add_option("--format", format, "json|table output");
  repro->add_option("--export", export_path, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitUsage : kExitOk;
  }

  try {
    if (check->parsed())
      return cmd_check(path);
    if (invariants->parsed())
      return cmd_invariants(path);
    if (generate->parsed())
      return cmd_generate(path, constraints, export_path, format);
    if (repro->parsed()) {
      if (path != "4-5-8" && path != "5-6-9" && path != "5-7-10" && path != "z2eq" &&
          path != "all") {
        std::cerr << "unknown case id: " << path << "\n";
        return kExitUsage;
      }
      return cmd_reproduce(path, seed, samples, jobs, format, export_path);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  }
  return kExitUsage;
}
