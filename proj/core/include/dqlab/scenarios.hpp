// Named experiments the CLI can run from a parsed config. Each scenario
// writes CSV/JSON data files (plot-ready, no rendering) into the configured
// output directory; DQLAB_OUTPUT_DIR overrides the directory when set.
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "dqlab/config.hpp"

namespace dqlab::cli {

struct ScenarioInfo {
    std::string name;
    std::string summary;
};

std::vector<ScenarioInfo> list_scenarios();

// Executes cfg.scenario and returns the files written. Throws ConfigError /
// ValidationError for bad inputs and NumericError for runtime failures
// (including failed acceptance criteria, after the report is written).
std::vector<std::filesystem::path> run_scenario(const ScenarioConfig& cfg);

} // namespace dqlab::cli
