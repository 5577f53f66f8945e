#pragma once

// Registry of executable checks S1..S10 for the triality examples.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "d4cr/report.hpp"

namespace d4cr {

class UnknownScenario : public std::runtime_error {
 public:
  explicit UnknownScenario(std::string_view id)
      : std::runtime_error("unknown scenario: " + std::string(id)) {}
};

struct Scenario {
  std::string id;
  std::string claim;
  std::string anchor;  // the displayed formula being checked
  Report (*runner)();
};

const std::vector<Scenario>& scenario_registry();

/// Exceptions thrown by a runner become a report with status error.
Report run_scenario(std::string_view id);

/// Every registered scenario, ordered by id.
std::vector<Report> run_all();

}  // namespace d4cr
