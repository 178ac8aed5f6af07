#pragma once

#include <optional>

#include <json.hpp>

#include "gatecost/dynamics.hpp"
#include "gatecost/protocols.hpp"

namespace gatecost {

// Absolute tolerance on every bound comparison.
inline constexpr double kPassTol = 1e-9;

struct BoundReport {
    double delta_S_nats = 0.0;
    double delta_I_bits = 0.0;
    double rhs_trajectory_nats = 0.0;
    double rhs_dimension_bits = 0.0;
    std::optional<double> rhs_reset_bits;
    int rate_bound_violations = 0;
    double slack_trajectory = 0.0;
    double slack_dimension = 0.0;
    bool pass = false;

    nlohmann::json to_json() const;
};

// Trajectory bound in nats: 2 * integral of ||H(t)|| * surrogate(t),
// trapezoid quadrature on the trace's own grid.
double bound_trajectory(const EvolutionTrace& trace);

// Dimension bound in bits: 2 sqrt(d) log2(d) * integral of ||H(t)||.
double bound_dimension(const EvolutionTrace& trace, int dim);

// Qubit-reset bound in bits: sqrt(2) * integral of |phi_dot|.
double bound_reset(const PhaseProtocol& protocol, int samples = kDefaultCostSamples);

// Slack of the rate bound per grid point and basis index:
// rhs_scale * 2 ||H|| sqrt(p_n) + tol - |dp_n/dt|, with tol = 10 dt^2 + 1e-9.
// The difference quotient at point j spans [t_{j-1}, t_{j+1}], so ||H|| is
// taken as the max over that window; a pointwise norm would misjudge
// schedules with jumps.
Eigen::MatrixXd rate_bound_slack(const EvolutionTrace& trace, double rhs_scale = 1.0);

// Evaluates all bounds against the trace and counts rate-bound violations.
// rhs_scale is a test hook that scales every bound right-hand side; the
// default 1.0 is the honest check.
BoundReport verify(const EvolutionTrace& trace, const PhaseProtocol* protocol = nullptr,
                   double rhs_scale = 1.0);

} // namespace gatecost
