#pragma once
// Bundled family scenarios: JSON files describing each K3 family (curve,
// fibration, lattices, fixed-locus counts, period data) together with the
// values every pipeline stage must reproduce.  verify_scenario recomputes
// the whole chain and reports one pass/fail entry per stage.
#include <string>
#include <vector>

#include "json.hpp"

namespace k3cy {

struct ScenarioCheck {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string computed;
};

struct ScenarioReport {
  std::string name;
  std::vector<ScenarioCheck> checks;
  bool all_passed = true;
};

// Resolution order: explicit argument, K3CY_SCENARIO_DIR environment
// variable, then the directory compiled into the library.
std::string scenario_directory(const std::string& override_dir = "");

// Sorted stems of the *.json files in the directory.
std::vector<std::string> available_scenarios(const std::string& dir = "");

// Accepts a bare scenario name (resolved against the scenario directory) or
// a path to a JSON file.  Unknown names raise parse_error.
nlohmann::json load_scenario(const std::string& name_or_path,
                             const std::string& override_dir = "");

ScenarioReport verify_scenario(const nlohmann::json& scenario);

}  // namespace k3cy
