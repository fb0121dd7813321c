// Command line front end: run scenarios, emit gallery files, export objects.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hopf/errors.hpp"
#include "hopf/scenario.hpp"

namespace {

using hopf::ExitCode;

int code(ExitCode c) { return static_cast<int>(c); }

int cmd_run(const std::string& file, const std::string& out_dir, int cap) {
  hopf::Scenario s = hopf::load_scenario(file);
  if (cap >= 0) s.cap = static_cast<std::size_t>(cap);
  hopf::RunResult r = hopf::run_scenario(s);
  std::cout << r.text();
  if (!out_dir.empty()) hopf::write_run(r, out_dir);
  return code(r.exit);
}

int cmd_gallery(const std::string& name, const std::string& out) {
  const std::string text = hopf::dump(hopf::scenario_to_json(hopf::gallery_scenario(name)));
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream o(out, std::ios::binary);
  if (!o) throw hopf::Error("cannot write " + out);
  o << text;
  return 0;
}

int cmd_export(const std::string& file, const std::string& id, const std::string& out) {
  hopf::RunResult r = hopf::run_scenario(hopf::load_scenario(file));
  auto it = r.objects.find(id);
  if (it == r.objects.end()) {
    std::cerr << "unknown object id '" << id << "'; available:";
    for (const auto& [k, _] : r.objects) std::cerr << " " << k;
    std::cerr << "\n";
    if (r.exit != ExitCode::ok) return code(r.exit);
    return code(ExitCode::schema);
  }
  std::ofstream o(out, std::ios::binary);
  if (!o) throw hopf::Error("cannot write " + out);
  o << hopf::dump(it->second);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact constructions and checks for Hopf algebras, biproducts and twists"};
  app.require_subcommand(1);

  std::string file, out_dir, name, out, id;
  int cap = -1;

  auto* run = app.add_subcommand("run", "Run the pipelines of a scenario file");
  run->add_option("file", file, "Scenario JSON")->required();
  run->add_option("--out", out_dir, "Directory for report.txt, report.json, hilbert.json and objects/");
  run->add_option("--cap", cap, "Override the Nichols degree cap")->check(CLI::NonNegativeNumber);

  auto* gallery = app.add_subcommand("gallery", "Write a canonical gallery scenario");
  gallery->add_option("name", name, "Gallery name")->required();
  gallery->add_option("--out", out, "Output file (stdout if omitted)");

  auto* exp = app.add_subcommand("export", "Write the structure constants of one object");
  exp->add_option("file", file, "Scenario JSON")->required();
  exp->add_option("id", id, "Object id, e.g. A, U, twist")->required();
  exp->add_option("out", out, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : code(ExitCode::schema);
  }

  try {
    if (*run) return cmd_run(file, out_dir, cap);
    if (*gallery) return cmd_gallery(name, out);
    if (*exp) return cmd_export(file, id, out);
  } catch (const hopf::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return code(ExitCode::schema);
  } catch (const hopf::DimensionBlowup& e) {
    std::cerr << "resource bound: " << e.what() << "\n";
    return code(ExitCode::resource);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return code(ExitCode::verification);
  }
  return 0;
}
