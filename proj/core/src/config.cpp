#include "dqlab/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "dqlab/io.hpp"

namespace dqlab::cli {

namespace {

const std::set<std::string> kGlobalKeys = {"scenario"};

const std::set<std::string> kParamKeys = {"m", "gamma", "k", "hbar", "charge_e", "light_c"};

const std::set<std::string> kNumericKeys = {
    // shared
    "dt", "t_end", "seed", "method", "rel_tol", "tolerance",
    // classical initial state (rotated chart x1,x2,v1,v2 or xy chart x,y,vx,vy)
    "chart", "x", "y", "vx", "vy", "x1", "x2", "v1", "v2", "alpha",
    // langevin
    "kbt", "n_paths", "record_stride", "with_spring", "x0", "v0",
    // quantum
    "grid_n", "x_min", "x_max", "n_samples", "record_every", "r_max", "radial_n", "n_levels",
    // ncplane
    "l2", "nc_dim", "path_csv",
    // spectral
    "cutoff", "u_max", "lambda", "a0", "a2", "a4",
    // doubling
    "q", "theta", "theta_steps", "n_modes_max",
};

const std::set<std::string> kOutputKeys = {"directory", "formats"};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' has non-numeric value '" + value + "'");
    }
}

} // namespace

double ScenarioConfig::num(const std::string& key, double fallback) const {
    const auto it = numerics.find(key);
    return it == numerics.end() ? fallback : parse_double(key, it->second);
}

double ScenarioConfig::num_required(const std::string& key) const {
    const auto it = numerics.find(key);
    if (it == numerics.end())
        throw ConfigError("config: scenario '" + scenario + "' requires key '" + key + "'");
    return parse_double(key, it->second);
}

int ScenarioConfig::num_int(const std::string& key, int fallback) const {
    const double v = num(key, static_cast<double>(fallback));
    return static_cast<int>(std::llround(v));
}

std::uint64_t ScenarioConfig::num_u64(const std::string& key, std::uint64_t fallback) const {
    const auto it = numerics.find(key);
    if (it == numerics.end()) return fallback;
    try {
        return std::stoull(it->second);
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' has non-integer value '" + it->second + "'");
    }
}

bool ScenarioConfig::flag(const std::string& key, bool fallback) const {
    const auto it = numerics.find(key);
    if (it == numerics.end()) return fallback;
    const std::string& v = it->second;
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("config: key '" + key + "' has non-boolean value '" + v + "'");
}

std::string ScenarioConfig::str(const std::string& key, const std::string& fallback) const {
    const auto it = numerics.find(key);
    return it == numerics.end() ? fallback : it->second;
}

ScenarioConfig parse_config_text(const std::string& text) {
    ScenarioConfig cfg;
    cfg.config_hash = io::hex64(io::fnv1a(text));

    std::istringstream in(text);
    std::string line, section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        // '#' starts a comment anywhere on the line.
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;

        if (stripped.front() == '[') {
            if (stripped.back() != ']')
                throw ConfigError("config: malformed section at line " + std::to_string(line_no));
            section = trim(stripped.substr(1, stripped.size() - 2));
            if (section != "params" && section != "numerics" && section != "output")
                throw ConfigError("config: unknown section '" + section + "'");
            continue;
        }

        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: expected key = value at line " + std::to_string(line_no));
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) throw ConfigError("config: empty key at line " + std::to_string(line_no));

        if (section.empty()) {
            if (!kGlobalKeys.count(key)) throw ConfigError("config: unknown key '" + key + "'");
            cfg.scenario = value;
        } else if (section == "params") {
            if (!kParamKeys.count(key))
                throw ConfigError("config: unknown key '" + key + "' in [params]");
            const double v = parse_double(key, value);
            if (key == "m") cfg.params.m = v;
            else if (key == "gamma") cfg.params.gamma = v;
            else if (key == "k") cfg.params.k = v;
            else if (key == "hbar") cfg.params.hbar = v;
            else if (key == "charge_e") cfg.params.charge_e = v;
            else cfg.params.light_c = v;
        } else if (section == "numerics") {
            if (!kNumericKeys.count(key))
                throw ConfigError("config: unknown key '" + key + "' in [numerics]");
            cfg.numerics[key] = value;
        } else { // output
            if (!kOutputKeys.count(key))
                throw ConfigError("config: unknown key '" + key + "' in [output]");
            if (key == "directory") {
                cfg.output.directory = value;
            } else {
                cfg.output.csv = false;
                cfg.output.json = false;
                std::istringstream fmts(value);
                std::string fmt;
                while (std::getline(fmts, fmt, ',')) {
                    fmt = trim(fmt);
                    if (fmt == "csv") cfg.output.csv = true;
                    else if (fmt == "json") cfg.output.json = true;
                    else throw ConfigError("config: unknown format '" + fmt + "'");
                }
            }
        }
    }
    if (cfg.scenario.empty()) throw ConfigError("config: missing 'scenario' key");
    return cfg;
}

ScenarioConfig parse_config_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("config: cannot read " + file.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config_text(text.str());
}

} // namespace dqlab::cli
