#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gatecost/errors.hpp"
#include "gatecost/scenario.hpp"

namespace {

// Exit codes: 0 all pass, 1 bound violation or failed run,
// 2 config error, 3 I/O error.
constexpr int kExitConfigError = 2;
constexpr int kExitIoError = 3;

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamiltonian gate-protocol simulator and information-cost bound checker"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::uint64_t seed = 0;
    int steps = 0;
    bool seed_set = false, steps_set = false;

    for (const auto& name : {"simulate", "sweep", "optimize", "qec", "verify"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "scenario config (JSON)");
        sub->add_option("--out", out_path, "output path for tables/reports");
        sub->add_option("--seed", seed, "random seed override")->trigger_on_parse();
        sub->add_option("--steps", steps, "integration steps override");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help
        }
        std::cerr << e.what() << '\n';
        return kExitConfigError;
    }

    const auto* sub = app.get_subcommands().front();
    seed_set = sub->count("--seed") > 0;
    steps_set = sub->count("--steps") > 0;

    try {
        gatecost::ScenarioConfig config;
        if (!config_path.empty()) {
            config = gatecost::load_config(config_path);
        }
        if (!config.scenario.empty() && config.scenario != sub->get_name()) {
            throw gatecost::InputError("config scenario '" + config.scenario +
                                       "' does not match subcommand '" + sub->get_name() + "'");
        }
        config.scenario = sub->get_name();
        if (!out_path.empty()) config.output_path = out_path;
        if (seed_set) config.seed = seed;
        if (steps_set) {
            if (steps < gatecost::kMinSteps) {
                throw gatecost::InputError("steps must be at least " +
                                           std::to_string(gatecost::kMinSteps));
            }
            config.steps = steps;
        }

        const gatecost::RunResult result = gatecost::run_scenario(config);
        std::cout << result.summary.dump(2) << '\n';
        return result.exit_code;
    } catch (const gatecost::InputError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const gatecost::IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kExitIoError;
    } catch (const std::exception& e) {
        std::cerr << "run failed: " << e.what() << '\n';
        return 1;
    }
}
