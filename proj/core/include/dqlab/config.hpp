// Scenario configuration: a flat key = value text format with sections.
//
//   # comment
//   scenario = classical        (before any section header)
//   [params]                    m, gamma, k, hbar, charge_e, light_c
//   [numerics]                  scenario-specific numeric knobs
//   [output]                    directory, formats (comma list of csv,json)
//
// Unknown sections or keys are rejected with the offending name; values are
// parsed on access so the owning scenario reports typed errors itself.
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "dqlab/errors.hpp"
#include "dqlab/model.hpp"

namespace dqlab::cli {

struct OutputConfig {
    std::filesystem::path directory = "out";
    bool csv = true;
    bool json = true;
};

struct ScenarioConfig {
    std::string scenario;
    model::OscillatorParams params;
    std::map<std::string, std::string> numerics;
    OutputConfig output;
    std::string config_hash; // FNV-1a of the raw config text

    bool has(const std::string& key) const { return numerics.count(key) > 0; }
    double num(const std::string& key, double fallback) const;
    double num_required(const std::string& key) const;
    int num_int(const std::string& key, int fallback) const;
    std::uint64_t num_u64(const std::string& key, std::uint64_t fallback) const;
    bool flag(const std::string& key, bool fallback) const;
    std::string str(const std::string& key, const std::string& fallback) const;
};

ScenarioConfig parse_config_text(const std::string& text);
ScenarioConfig parse_config_file(const std::filesystem::path& file);

} // namespace dqlab::cli
