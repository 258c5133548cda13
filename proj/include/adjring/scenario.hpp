#ifndef ADJRING_SCENARIO_HPP
#define ADJRING_SCENARIO_HPP

#include "adjring/serialize.hpp"

#include <stdexcept>
#include <string>

namespace adjring {

// Scenario-level problems (schema violations, unknown presets or tasks,
// unresolved names). Task-level computation errors are recorded in the
// report instead and do not stop the run.
struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScenarioOptions {
  Int kmax{120};
  long seed = 42;
  int threads = 1;
};

struct Report {
  Json tasks = Json::array();
  bool ok = true;  // false when any task recorded an error
};

// Executes the scenario's tasks in declared order. The scenario object:
//   {"fan": {"preset":"P2"} | {"dim":n,"rays":[[..]],"max_cones":[[..]]},
//    "divisors": {"name": ["p/q",...]}, "field_d": n, "tasks": [...]}
Report run_scenario(const Json& scenario, const ScenarioOptions& opt = {});

// Stable serialization; format "json" or "csv".
std::string emit_report(const Report& r, const std::string& format);

}  // namespace adjring

#endif
