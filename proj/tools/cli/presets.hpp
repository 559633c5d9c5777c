#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cli/scenario.hpp"

namespace bosonspin::cli {

/// fig1 .. fig8.
const std::vector<std::string>& figure_names();

/// Throws ScenarioError for an unknown name.
Scenario figure_preset(std::string_view name);

/// Small-amplitude ensemble used by `validate` without a file.
Scenario default_validation_scenario();

}  // namespace bosonspin::cli
