#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gatecost/codes.hpp"
#include "gatecost/landauer.hpp"

namespace gatecost {

struct SweepRange {
    double lo = -2.0;
    double hi = 2.0;
    int count = 401;
};

struct ScenarioConfig {
    std::string scenario;      // simulate | sweep | optimize | qec | verify
    PhaseProtocol protocol;    // {"tau": real, "fourier": [A_1 .. A_K]}
    int steps = 4096;
    std::uint64_t seed = 7;
    SweepRange sweep_range;
    int modes = 1;
    std::string output_path;   // empty selects the scenario default
    int draws = 200;           // verification campaign size
};

// Strict parse: unknown fields are rejected, structural preconditions
// (steps >= 16, sweep count >= 2) are enforced here.
ScenarioConfig parse_config(const nlohmann::json& j);
ScenarioConfig load_config(const std::string& path);

struct RunResult {
    int exit_code = 0;         // 0 pass, 1 bound violation
    nlohmann::json summary;
};

RunResult run_simulate(const ScenarioConfig& config);
RunResult run_sweep(const ScenarioConfig& config);
RunResult run_optimize(const ScenarioConfig& config);
RunResult run_qec(const ScenarioConfig& config);
RunResult run_verify(const ScenarioConfig& config);
RunResult run_scenario(const ScenarioConfig& config);

// Randomized bound-verification campaign over piecewise-constant
// Hermitian schedules and random initial states.
struct CampaignOptions {
    int draws = 200;
    std::vector<int> dims = {2, 4};
    int steps = 4096;
    int pieces = 8;
    std::uint64_t seed = 7;
    double max_h_norm = 5.0;
    double rhs_scale = 1.0;    // test hook: scales every bound right-hand side
};

struct CampaignFailure {
    int draw = 0;
    int dim = 0;
    std::string kind;          // rate | trajectory | dimension | holder
};

struct CampaignSummary {
    int draws = 0;
    int rate_violations = 0;
    int trajectory_violations = 0;
    int dimension_violations = 0;
    int holder_violations = 0;
    double worst_rate_slack = 0.0;
    double worst_trajectory_slack = 0.0;
    double worst_dimension_slack = 0.0;
    double worst_holder_slack = 0.0;
    double worst_unitarity_defect = 0.0; // max ||U^dagger U - I|| over draw propagators
    std::vector<CampaignFailure> failures;

    int total_violations() const {
        return rate_violations + trajectory_violations + dimension_violations + holder_violations;
    }
    bool pass() const { return total_violations() == 0; }
    nlohmann::json to_json() const;
};

CampaignSummary run_campaign(const CampaignOptions& options);

} // namespace gatecost
