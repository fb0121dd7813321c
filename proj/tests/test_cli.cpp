#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hopf/errors.hpp"
#include "hopf/scenario.hpp"

using namespace hopf;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / "hopfkit_cli_tests" / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

int cli(const std::string& args) {
  const std::string cmd = std::string(HOPFKIT_CLI) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream o(p, std::ios::binary);
  o << text;
}

Json stage_data(const fs::path& dir, const std::string& stage) {
  Json j = Json::parse(slurp(dir / "report.json"));
  for (const auto& s : j["stages"])
    if (s["name"] == stage) return s;
  return Json();
}

}  // namespace

TEST_CASE("gallery files are canonical and reload") {
  for (const auto& name : gallery_names()) {
    const std::string text = dump(scenario_to_json(gallery_scenario(name)));
    Scenario back = scenario_from_json(Json::parse(text));
    CHECK(dump(scenario_to_json(back)) == text);
  }
  CHECK_THROWS_AS(gallery_scenario("nope"), SchemaError);
}

TEST_CASE("shipped gallery files match the generator") {
  for (const auto& name : gallery_names()) {
    CAPTURE(name);
    fs::path p = fs::path(HOPFKIT_SOURCE_DIR) / "gallery" / (name + ".json");
    CHECK(slurp(p) == dump(scenario_to_json(gallery_scenario(name))));
  }
}

TEST_CASE("gallery command writes the canonical file") {
  fs::path dir = scratch("gallery");
  CHECK(cli("gallery sweedler --out " + (dir / "s.json").string()) == 0);
  CHECK(slurp(dir / "s.json") == dump(scenario_to_json(gallery_scenario("sweedler"))));
  CHECK(cli("gallery unknown_name --out " + (dir / "u.json").string()) == 2);
}

TEST_CASE("every gallery scenario runs clean") {
  for (const auto& name : gallery_names()) {
    CAPTURE(name);
    fs::path dir = scratch("run_" + name);
    REQUIRE(cli("gallery " + name + " --out " + (dir / "s.json").string()) == 0);
    CHECK(cli("run " + (dir / "s.json").string() + " --out " + (dir / "out").string()) == 0);
    CHECK(fs::exists(dir / "out" / "report.txt"));
    CHECK(fs::exists(dir / "out" / "hilbert.json"));
  }
}

TEST_CASE("run reports dimensions") {
  RunResult sw = run_scenario(gallery_scenario("sweedler"));
  CHECK(sw.exit == ExitCode::ok);
  CHECK(sw.hilbert["V"] == Json::parse("[1,1,0,0,0]"));
  CHECK(sw.stage("biproduct")->data["dim_A"] == 4);
  CHECK(sw.stage("twist")->data["dim"] == 16);

  RunResult taft = run_scenario(gallery_scenario("taft3_f7"));
  CHECK(taft.exit == ExitCode::ok);
  CHECK(taft.hilbert["V"] == Json::parse("[1,1,1,0,0]"));
  CHECK(taft.stage("biproduct")->data["dim_A"] == 9);

  RunResult qp = run_scenario(gallery_scenario("qplane"));
  CHECK(qp.exit == ExitCode::ok);
  CHECK(qp.hilbert["V"] == Json::parse("[1,2,1,0,0]"));

  RunResult triv = run_scenario(gallery_scenario("trivial"));
  CHECK(triv.exit == ExitCode::ok);
  CHECK(triv.stage("twist")->data["dim"] == 1);
  CHECK(triv.stage("biproduct")->data["dim_U"] == 1);
}

TEST_CASE("perturbed phi fails with the offending axiom") {
  fs::path dir = scratch("perturbed");
  Json j = scenario_to_json(gallery_scenario("sweedler"));
  j["phi"] = Json::parse(R"([["1"]])");
  spit(dir / "s.json", dump(j));
  CHECK(cli("run " + (dir / "s.json").string() + " --out " + (dir / "out").string()) == 1);
  Json st = stage_data(dir / "out", "datum");
  CHECK(st["status"] == "fail");
  bool named = false;
  for (const auto& f : st["report"]["failures"])
    if (f["axiom"] == "tau,beta: C.2" && !f["indices"].empty()) named = true;
  CHECK(named);
  CHECK(st["data"]["condition_violations"] == Json::parse("[0]"));
  CHECK(stage_data(dir / "out", "twist")["status"] == "skipped");
}

TEST_CASE("schema and resource errors") {
  fs::path dir = scratch("errors");
  spit(dir / "bad.json", "{\"schema\": \"hopfkit-scenario\"}");
  CHECK(cli("run " + (dir / "bad.json").string()) == 2);
  spit(dir / "garbage.json", "not json");
  CHECK(cli("run " + (dir / "garbage.json").string()) == 2);
  CHECK(cli("run " + (dir / "missing.json").string()) == 2);

  Json j = scenario_to_json(gallery_scenario("sweedler"));
  j["chi"] = "oops";
  j["V"][0]["character"] = Json::parse(R"(["2"])");
  spit(dir / "root.json", dump(j));
  CHECK(cli("run " + (dir / "root.json").string()) == 2);

  // x^2 = 0 is not visible below degree 2.
  REQUIRE(cli("gallery sweedler --out " + (dir / "s.json").string()) == 0);
  CHECK(cli("run " + (dir / "s.json").string() + " --cap 1") == 3);
  CHECK(cli("bogus") == 2);
}

TEST_CASE("export round trip") {
  fs::path dir = scratch("export");
  REQUIRE(cli("gallery sweedler --out " + (dir / "s.json").string()) == 0);
  CHECK(cli("export " + (dir / "s.json").string() + " A " + (dir / "A.json").string()) == 0);
  FiniteHopf a = hopf_from_json(Json::parse(slurp(dir / "A.json")));
  CHECK(a.dim == 4);
  CHECK(check_bialgebra(a).ok());
  CHECK(dump(to_json(a)) == slurp(dir / "A.json"));

  REQUIRE(cli("gallery double_sweedler --out " + (dir / "d.json").string()) == 0);
  CHECK(cli("export " + (dir / "d.json").string() + " twist " + (dir / "t.json").string()) == 0);
  FiniteHopf t = hopf_from_json(Json::parse(slurp(dir / "t.json")));
  CHECK(t.dim == 16);
  CHECK(dump(to_json(t)) == slurp(dir / "t.json"));

  CHECK(cli("export " + (dir / "s.json").string() + " nothing " + (dir / "n.json").string()) == 2);
}

TEST_CASE("runs are deterministic") {
  fs::path dir = scratch("determinism");
  REQUIRE(cli("gallery reduced_rank --out " + (dir / "s.json").string()) == 0);
  REQUIRE(cli("run " + (dir / "s.json").string() + " --out " + (dir / "a").string()) == 0);
  REQUIRE(cli("run " + (dir / "s.json").string() + " --out " + (dir / "b").string()) == 0);
  for (const auto& e : fs::recursive_directory_iterator(dir / "a")) {
    if (!e.is_regular_file()) continue;
    fs::path rel = fs::relative(e.path(), dir / "a");
    CAPTURE(rel.string());
    CHECK(slurp(e.path()) == slurp(dir / "b" / rel));
  }
}
