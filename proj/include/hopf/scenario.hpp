#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopf/serialize.hpp"
#include "hopf/twist.hpp"

namespace hopf {

// A group datum plus the cap and the pipelines to run. Pipelines, in
// dependency order: nichols, biproduct, op_iso, dual_iso, datum, twist, reduce.
struct Scenario {
  std::string name;
  std::string description;
  GroupTwistDatum datum;
  std::size_t cap = 4;
  std::vector<std::string> pipelines;
};

const std::vector<std::string>& pipeline_names();

// Throws SchemaError on a malformed document.
Scenario scenario_from_json(const Json& j);
Json scenario_to_json(const Scenario& s);
Scenario load_scenario(const std::string& path);

const std::vector<std::string>& gallery_names();
// Throws SchemaError for an unknown name.
Scenario gallery_scenario(const std::string& name);

enum class ExitCode : int { ok = 0, verification = 1, schema = 2, resource = 3 };

struct StageResult {
  std::string name;
  std::string status;  // pass, fail, error, skipped
  std::string message;
  Report report;
  Json data = Json::object();
};

struct RunResult {
  std::string scenario;
  std::vector<StageResult> stages;
  Json hilbert = Json::object();
  std::map<std::string, Json> objects;  // structure constants by object id
  ExitCode exit = ExitCode::ok;

  const StageResult* stage(const std::string& name) const;
  std::string text() const;
  Json json() const;
};

// Runs the requested pipelines and their prerequisites. Never throws for
// failures inside a pipeline; they are recorded in the stage and the exit code.
RunResult run_scenario(const Scenario& s, const NicholsOptions& opts = {});

// Writes report.txt, report.json, hilbert.json and objects/<id>.json.
void write_run(const RunResult& r, const std::string& dir);

}  // namespace hopf
