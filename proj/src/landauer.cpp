#include "gatecost/landauer.hpp"

#include <algorithm>
#include <cmath>

#include "gatecost/errors.hpp"
#include "gatecost/information.hpp"

namespace gatecost {

namespace {

void check_trace(const EvolutionTrace& trace) {
    if (trace.steps() < 2) {
        throw InputError("bound evaluation: trace grid is degenerate");
    }
}

double trapezoid(const std::vector<double>& t, const std::vector<double>& f) {
    double sum = 0.0;
    for (std::size_t j = 1; j < t.size(); ++j) {
        sum += 0.5 * (f[j - 1] + f[j]) * (t[j] - t[j - 1]);
    }
    return sum;
}

} // namespace

nlohmann::json BoundReport::to_json() const {
    nlohmann::json j{
        {"delta_S_nats", delta_S_nats},
        {"delta_I_bits", delta_I_bits},
        {"rhs_trajectory_nats", rhs_trajectory_nats},
        {"rhs_dimension_bits", rhs_dimension_bits},
        {"rate_bound_violations", rate_bound_violations},
        {"slack_trajectory", slack_trajectory},
        {"slack_dimension", slack_dimension},
        {"pass", pass},
    };
    if (rhs_reset_bits) {
        j["rhs_reset_bits"] = *rhs_reset_bits;
    }
    return j;
}

double bound_trajectory(const EvolutionTrace& trace) {
    check_trace(trace);
    std::vector<double> integrand(trace.times.size());
    for (std::size_t j = 0; j < integrand.size(); ++j) {
        integrand[j] = trace.h_norms[j] * trace.surrogate[j];
    }
    return kBoundPrefactor * trapezoid(trace.times, integrand);
}

double bound_dimension(const EvolutionTrace& trace, int dim) {
    check_trace(trace);
    if (dim != trace.dim()) {
        throw InputError("bound_dimension: dim does not match the trace");
    }
    const double d = static_cast<double>(dim);
    return kBoundPrefactor * std::sqrt(d) * std::log2(d) * trapezoid(trace.times, trace.h_norms);
}

double bound_reset(const PhaseProtocol& protocol, int samples) {
    return std::sqrt(2.0) * cost_numeric(protocol, samples);
}

Eigen::MatrixXd rate_bound_slack(const EvolutionTrace& trace, double rhs_scale) {
    check_trace(trace);
    const Eigen::MatrixXd rates = prob_rates(trace);
    const double dt = trace.dt();
    const double tol = 10.0 * dt * dt + kPassTol;
    const int m = trace.steps();
    Eigen::MatrixXd slack(m + 1, trace.dim());
    for (int j = 0; j <= m; ++j) {
        const int lo = std::max(0, j - 1);
        const int hi = std::min(m, j + 1);
        double h_window = 0.0;
        for (int k = lo; k <= hi; ++k) h_window = std::max(h_window, trace.h_norms[k]);
        // One-sided stencils at the ends reach one extra point inward.
        if (j == 0) h_window = std::max(h_window, trace.h_norms[2]);
        if (j == m) h_window = std::max(h_window, trace.h_norms[m - 2]);
        for (int n = 0; n < trace.dim(); ++n) {
            const double rhs =
                rhs_scale * kBoundPrefactor * h_window * std::sqrt(std::max(0.0, trace.probs(j, n)));
            slack(j, n) = rhs + tol - std::abs(rates(j, n));
        }
    }
    return slack;
}

BoundReport verify(const EvolutionTrace& trace, const PhaseProtocol* protocol, double rhs_scale) {
    check_trace(trace);

    BoundReport report;
    const Eigen::VectorXd p_in = trace.probs.row(0);
    const Eigen::VectorXd p_out = trace.probs.row(trace.steps());
    report.delta_S_nats = shannon_nats(p_out / p_out.sum()) - shannon_nats(p_in / p_in.sum());
    report.delta_I_bits = report.delta_S_nats / std::log(2.0);
    report.rhs_trajectory_nats = rhs_scale * bound_trajectory(trace);
    report.rhs_dimension_bits = rhs_scale * bound_dimension(trace, trace.dim());
    if (protocol) {
        report.rhs_reset_bits = rhs_scale * bound_reset(*protocol);
    }

    report.rate_bound_violations = (rate_bound_slack(trace, rhs_scale).array() < 0.0).count();

    report.slack_trajectory = report.rhs_trajectory_nats - std::abs(report.delta_S_nats);
    report.slack_dimension = report.rhs_dimension_bits - std::abs(report.delta_I_bits);
    report.pass = report.slack_trajectory >= -kPassTol && report.slack_dimension >= -kPassTol &&
                  report.rate_bound_violations == 0;
    return report;
}

} // namespace gatecost
