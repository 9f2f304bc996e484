// dqlab command-line runner.
//
//   dqlab run <config>     execute the scenario described by a config file
//   dqlab acceptance       run the full acceptance suite on defaults
//   dqlab list-scenarios   print available scenarios
//
// Exit codes: 0 success, 1 config/validation failure, 2 numeric failure.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dqlab/config.hpp"
#include "dqlab/errors.hpp"
#include "dqlab/scenarios.hpp"

namespace {

int execute(const dqlab::cli::ScenarioConfig& cfg) {
    const auto files = dqlab::cli::run_scenario(cfg);
    for (const auto& f : files) std::cout << "wrote " << f.string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dqlab: numerical laboratory for dissipative doubled-coordinate dynamics"};
    app.require_subcommand(1);

    std::string config_path;
    auto* run = app.add_subcommand("run", "execute a scenario from a config file");
    run->add_option("config", config_path, "path to the config file")->required();

    std::string out_dir = "out";
    auto* acceptance = app.add_subcommand("acceptance", "run the acceptance suite on defaults");
    acceptance->add_option("-o,--output", out_dir, "output directory for the report");

    auto* list = app.add_subcommand("list-scenarios", "print available scenarios");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            for (const auto& s : dqlab::cli::list_scenarios())
                std::cout << s.name << "  -  " << s.summary << "\n";
            return 0;
        }
        if (acceptance->parsed()) {
            dqlab::cli::ScenarioConfig cfg;
            cfg.scenario = "acceptance";
            cfg.output.directory = out_dir;
            cfg.config_hash = "defaults";
            return execute(cfg);
        }
        return execute(dqlab::cli::parse_config_file(config_path));
    } catch (const dqlab::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const dqlab::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const dqlab::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
