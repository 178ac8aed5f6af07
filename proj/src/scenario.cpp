#include "gatecost/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <set>

#include "gatecost/errors.hpp"
#include "gatecost/format.hpp"
#include "gatecost/information.hpp"

namespace gatecost {

namespace {

const std::set<std::string> kScenarios = {"simulate", "sweep", "optimize", "qec", "verify"};

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write output file: " + path);
    }
    return out;
}

std::string output_or(const ScenarioConfig& config, const std::string& fallback) {
    return config.output_path.empty() ? fallback : config.output_path;
}

Vector plus_state() {
    Vector v(2);
    v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    return v;
}

// Gaussian Hermitian draw with the operator norm clamped to max_norm.
Matrix random_hermitian(int dim, double max_norm, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix a(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            a(r, c) = Complex(gauss(rng), gauss(rng));
        }
    }
    Matrix h = 0.5 * (a + a.adjoint());
    const double norm = operator_norm(h);
    if (norm > max_norm) {
        h *= max_norm / norm;
    }
    return h;
}

Vector random_state(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v(dim);
    for (int n = 0; n < dim; ++n) {
        v[n] = Complex(gauss(rng), gauss(rng));
    }
    v.normalize();
    return v;
}

} // namespace

ScenarioConfig parse_config(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw InputError("config: top level must be a JSON object");
    }
    const std::set<std::string> known = {"scenario", "protocol", "steps",      "seed",
                                         "sweep_range", "modes", "output_path", "draws"};
    for (const auto& [key, value] : j.items()) {
        if (!known.count(key)) {
            throw InputError("config: unknown field '" + key + "'");
        }
    }

    ScenarioConfig config;
    if (j.contains("scenario")) {
        config.scenario = j.at("scenario").get<std::string>();
        if (!kScenarios.count(config.scenario)) {
            throw InputError("config: unknown scenario '" + config.scenario + "'");
        }
    }
    if (j.contains("protocol")) {
        const auto& p = j.at("protocol");
        for (const auto& [key, value] : p.items()) {
            if (key != "tau" && key != "fourier") {
                throw InputError("config: unknown protocol field '" + key + "'");
            }
        }
        if (p.contains("tau")) config.protocol.tau = p.at("tau").get<double>();
        if (p.contains("fourier")) config.protocol.fourier = p.at("fourier").get<std::vector<double>>();
    }
    if (j.contains("steps")) config.steps = j.at("steps").get<int>();
    if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("modes")) config.modes = j.at("modes").get<int>();
    if (j.contains("output_path")) config.output_path = j.at("output_path").get<std::string>();
    if (j.contains("draws")) config.draws = j.at("draws").get<int>();
    if (j.contains("sweep_range")) {
        const auto& r = j.at("sweep_range");
        if (!r.is_array() || r.size() != 3) {
            throw InputError("config: sweep_range must be [lo, hi, count]");
        }
        config.sweep_range.lo = r[0].get<double>();
        config.sweep_range.hi = r[1].get<double>();
        config.sweep_range.count = r[2].get<int>();
    }

    if (config.steps < kMinSteps) {
        throw InputError("config: steps must be at least " + std::to_string(kMinSteps));
    }
    if (config.sweep_range.count < 2) {
        throw InputError("config: sweep count must be at least 2");
    }
    if (!(config.sweep_range.hi >= config.sweep_range.lo)) {
        throw InputError("config: sweep range must have hi >= lo");
    }
    if (config.modes < 0) {
        throw InputError("config: modes must be nonnegative");
    }
    if (config.draws < 0) {
        throw InputError("config: draws must be nonnegative");
    }
    return config;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read config file: " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("config: invalid JSON: ") + e.what());
    }
    return parse_config(j);
}

RunResult run_simulate(const ScenarioConfig& config) {
    const HamiltonianSchedule schedule = hadamard_schedule(config.protocol);
    const EvolutionTrace trace = evolve(schedule, plus_state(), config.steps);
    const BoundReport report = verify(trace, &config.protocol);

    const std::string csv_path = output_or(config, "trace.csv");
    auto out = open_output(csv_path);
    out << "t,p0,p1,shannon_nats,surrogate,h_norm\n";
    for (std::size_t j = 0; j < trace.times.size(); ++j) {
        const Eigen::VectorXd p = trace.probs.row(j);
        out << format_g17(trace.times[j]) << ',' << format_g17(p[0]) << ',' << format_g17(p[1])
            << ',' << format_g17(shannon_nats(p / p.sum())) << ',' << format_g17(trace.surrogate[j])
            << ',' << format_g17(trace.h_norms[j]) << '\n';
    }

    nlohmann::json summary = report.to_json();
    summary["trace_csv"] = csv_path;
    summary["steps"] = config.steps;

    std::filesystem::path report_path(csv_path);
    report_path.replace_extension("report.json");
    summary["report_json"] = report_path.string();
    open_output(report_path.string()) << report.to_json().dump(2) << '\n';

    return {report.pass ? 0 : 1, summary};
}

RunResult run_sweep(const ScenarioConfig& config) {
    if (!(config.protocol.tau > 0.0)) {
        throw InputError("sweep: protocol tau must be positive");
    }
    const auto& range = config.sweep_range;
    const std::string csv_path = output_or(config, "sweep.csv");
    auto out = open_output(csv_path);
    out << "A,cost_closed_form,cost_numeric,bound_reset_bits,reference\n";

    const double reference = 1.0 / std::sqrt(2.0); // |delta I| / sqrt 2 for qubit reset
    double max_diff = 0.0;
    for (int i = 0; i < range.count; ++i) {
        const double a =
            range.lo + (range.hi - range.lo) * static_cast<double>(i) / (range.count - 1);
        const PhaseProtocol protocol{config.protocol.tau, {a}};
        const double closed = cost_closed_form_single_mode(a);
        const double numeric = cost_numeric(protocol, kDefaultCostSamples);
        max_diff = std::max(max_diff, std::abs(closed - numeric));
        out << format_g17(a) << ',' << format_g17(closed) << ',' << format_g17(numeric) << ','
            << format_g17(std::sqrt(2.0) * numeric) << ',' << format_g17(reference) << '\n';
    }

    nlohmann::json summary{
        {"rows", range.count},
        {"max_abs_closed_minus_numeric", max_diff},
        {"sweep_csv", csv_path},
    };
    return {0, summary};
}

RunResult run_optimize(const ScenarioConfig& config) {
    const int modes = config.modes;
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> coeff(-1.5, 1.5);

    OptimizeResult best;
    best.cost = std::numeric_limits<double>::infinity();
    int total_iterations = 0;
    const int starts = modes == 0 ? 1 : 2 + 2 * modes;
    for (int s = 0; s < starts; ++s) {
        std::vector<double> init(modes, 0.0);
        if (s > 0) {
            for (double& x : init) x = coeff(rng);
        }
        OptimizeResult run = optimize_protocol(modes, init, 500, 1e-9, config.protocol.tau);
        total_iterations += run.iterations;
        if (run.cost < best.cost) {
            best = run;
        }
    }

    nlohmann::json summary{
        {"best_coeffs", best.protocol.fourier},
        {"best_cost", best.cost},
        {"iterations", total_iterations},
        {"converged", best.converged},
    };
    if (!config.output_path.empty()) {
        open_output(config.output_path) << summary.dump(2) << '\n';
    }
    return {0, summary};
}

RunResult run_qec(const ScenarioConfig& config) {
    if (config.protocol.tau < 0.0) {
        throw InputError("qec: protocol tau must be nonnegative");
    }
    // tau == 0 means no gate is run at all; the field integral vanishes.
    const double single_qubit_integral =
        config.protocol.tau == 0.0 ? 0.0 : 0.5 * cost_numeric(config.protocol);

    const Complex one(1.0, 0.0), zero(0.0, 0.0), half(1.0 / std::sqrt(2.0), 0.0);
    nlohmann::json rows = nlohmann::json::array();
    std::vector<CodeSpec> codes{shor_code(), perfect_code()};
    std::vector<double> costs;
    for (const auto& code : codes) {
        const double cost = code_cost_bound_bits(code, single_qubit_integral);
        costs.push_back(cost);
        rows.push_back({
            {"code", code.name},
            {"n_physical", code.n_physical},
            {"marginal_bits_logical0", encoded_marginal_bits(code, one, zero)},
            {"marginal_bits_logical1", encoded_marginal_bits(code, zero, one)},
            {"marginal_bits_logical_plus", encoded_marginal_bits(code, half, half)},
            {"cost_bound_bits", cost},
        });
    }

    nlohmann::json summary{
        {"single_qubit_integral", single_qubit_integral},
        {"codes", rows},
    };
    if (costs[1] > 0.0) {
        summary["cost_ratio_shor_over_perfect"] = costs[0] / costs[1];
    }
    if (!config.output_path.empty()) {
        open_output(config.output_path) << summary.dump(2) << '\n';
        const std::filesystem::path base(config.output_path);
        for (const auto& code : codes) {
            for (int logical = 0; logical < 2; ++logical) {
                std::filesystem::path p = base;
                p.replace_extension();
                p += "_" + code.name + std::to_string(logical) + ".csv";
                auto csv = open_output(p.string());
                write_state_csv(logical == 0 ? code.encode0 : code.encode1, code.n_physical, csv);
            }
        }
    }
    return {0, summary};
}

CampaignSummary run_campaign(const CampaignOptions& options) {
    if (options.draws < 0 || options.pieces < 1 || options.steps < kMinSteps) {
        throw InputError("campaign: bad draw/piece/step counts");
    }
    if (options.dims.empty()) {
        throw InputError("campaign: need at least one dimension");
    }

    CampaignSummary summary;
    summary.draws = options.draws;
    summary.worst_rate_slack = std::numeric_limits<double>::infinity();
    summary.worst_trajectory_slack = std::numeric_limits<double>::infinity();
    summary.worst_dimension_slack = std::numeric_limits<double>::infinity();
    summary.worst_holder_slack = std::numeric_limits<double>::infinity();

    std::mt19937_64 rng(options.seed);
    // Piece boundaries land on grid points so every step sees one constant H.
    int steps = options.steps;
    if (steps % options.pieces != 0) {
        steps += options.pieces - steps % options.pieces;
    }

    for (int draw = 0; draw < options.draws; ++draw) {
        const int dim = options.dims[draw % options.dims.size()];
        const double tau = 1.0;
        std::vector<Matrix> pieces;
        pieces.reserve(options.pieces);
        for (int p = 0; p < options.pieces; ++p) {
            pieces.push_back(random_hermitian(dim, options.max_h_norm, rng));
        }
        const int npieces = options.pieces;
        HamiltonianSchedule schedule{
            dim, tau, [pieces, npieces, tau](double t) {
                const int idx = std::min(static_cast<int>(t / tau * npieces), npieces - 1);
                return pieces[idx];
            }};
        const Vector psi0 = random_state(dim, rng);
        const EvolutionTrace trace = evolve(schedule, psi0, steps);
        const BoundReport report = verify(trace, nullptr, options.rhs_scale);

        const Matrix u = propagator(schedule, steps);
        summary.worst_unitarity_defect =
            std::max(summary.worst_unitarity_defect,
                     max_abs(Matrix(u.adjoint() * u - Matrix::Identity(dim, dim))));

        if (report.rate_bound_violations > 0) {
            summary.rate_violations += report.rate_bound_violations;
            summary.failures.push_back({draw, dim, "rate"});
        }
        if (report.slack_trajectory < -kPassTol) {
            ++summary.trajectory_violations;
            summary.failures.push_back({draw, dim, "trajectory"});
        }
        if (report.slack_dimension < -kPassTol) {
            ++summary.dimension_violations;
            summary.failures.push_back({draw, dim, "dimension"});
        }
        summary.worst_trajectory_slack =
            std::min(summary.worst_trajectory_slack, report.slack_trajectory);
        summary.worst_dimension_slack =
            std::min(summary.worst_dimension_slack, report.slack_dimension);

        summary.worst_rate_slack = std::min(
            summary.worst_rate_slack, rate_bound_slack(trace, options.rhs_scale).minCoeff());

        // Rank-1 Hoelder inequality |<n|H|psi><psi|n>| <= ||H|| sqrt(p_n),
        // spot-checked at the start, middle and end of the trace.
        bool holder_failed = false;
        for (int j : {0, trace.steps() / 2, trace.steps()}) {
            const double t = std::min(trace.times[j], tau * (1.0 - 1e-12));
            const Matrix h = schedule.at(t);
            const double norm = operator_norm(h);
            const Vector& psi = trace.states[j];
            const Vector h_psi = h * psi;
            for (int n = 0; n < dim; ++n) {
                const double lhs = std::abs(h_psi[n] * std::conj(psi[n]));
                const double rhs =
                    options.rhs_scale * norm * std::sqrt(std::max(0.0, trace.probs(j, n)));
                summary.worst_holder_slack =
                    std::min(summary.worst_holder_slack, rhs + kPassTol - lhs);
                if (lhs > rhs + kPassTol) {
                    ++summary.holder_violations;
                    holder_failed = true;
                }
            }
        }
        if (holder_failed) {
            summary.failures.push_back({draw, dim, "holder"});
        }
    }
    return summary;
}

nlohmann::json CampaignSummary::to_json() const {
    nlohmann::json failures_json = nlohmann::json::array();
    for (const auto& f : failures) {
        failures_json.push_back({{"draw", f.draw}, {"dim", f.dim}, {"kind", f.kind}});
    }
    return nlohmann::json{
        {"draws", draws},
        {"rate_violations", rate_violations},
        {"trajectory_violations", trajectory_violations},
        {"dimension_violations", dimension_violations},
        {"holder_violations", holder_violations},
        {"total_violations", total_violations()},
        {"worst_rate_slack", draws > 0 ? worst_rate_slack : 0.0},
        {"worst_trajectory_slack", draws > 0 ? worst_trajectory_slack : 0.0},
        {"worst_dimension_slack", draws > 0 ? worst_dimension_slack : 0.0},
        {"worst_holder_slack", draws > 0 ? worst_holder_slack : 0.0},
        {"worst_unitarity_defect", worst_unitarity_defect},
        {"pass", pass()},
        {"failures", failures_json},
    };
}

RunResult run_verify(const ScenarioConfig& config) {
    CampaignOptions options;
    options.draws = config.draws;
    options.steps = config.steps;
    options.seed = config.seed;
    const CampaignSummary summary = run_campaign(options);

    nlohmann::json j = summary.to_json();
    j["seed"] = config.seed;
    if (!config.output_path.empty()) {
        open_output(config.output_path) << j.dump(2) << '\n';
    }
    return {summary.pass() ? 0 : 1, j};
}

RunResult run_scenario(const ScenarioConfig& config) {
    if (config.scenario == "simulate") return run_simulate(config);
    if (config.scenario == "sweep") return run_sweep(config);
    if (config.scenario == "optimize") return run_optimize(config);
    if (config.scenario == "qec") return run_qec(config);
    if (config.scenario == "verify") return run_verify(config);
    throw InputError("unknown scenario '" + config.scenario + "'");
}

} // namespace gatecost
