#pragma once

#include <functional>
#include <vector>

#include "gatecost/linalg.hpp"

namespace gatecost {

inline constexpr int kMinSteps = 16;

// Time-dependent Hamiltonian H(t) on [0, tau]. The evaluator must return
// a Hermitian dim x dim matrix for every sampled t; this is spot-checked
// on the integration grid.
struct HamiltonianSchedule {
    int dim = 2;
    double tau = 1.0;
    std::function<Matrix(double)> at;
};

HamiltonianSchedule zero_schedule(int dim, double tau);
HamiltonianSchedule constant_schedule(const Matrix& h, double tau);

// Sampled trajectory: states, logical-basis marginals, Hamiltonian norms
// and the surrogate entropy on a uniform grid of steps+1 points.
struct EvolutionTrace {
    double tau = 0.0;
    std::vector<double> times;
    std::vector<Vector> states;
    Eigen::MatrixXd probs;       // row j = marginal distribution at times[j]
    std::vector<double> h_norms;
    std::vector<double> surrogate;

    int dim() const { return states.empty() ? 0 : static_cast<int>(states.front().size()); }
    int steps() const { return static_cast<int>(times.size()) - 1; }
    double dt() const { return steps() > 0 ? tau / steps() : 0.0; }
};

// Fixed-step propagation with per-step midpoint exponentials
// U_k = exp(-i H(t_k + dt/2) dt), which keeps every step exactly unitary.
EvolutionTrace evolve(const HamiltonianSchedule& schedule, const Vector& psi0, int steps);

// Time-ordered product U_{M-1} ... U_0 of the same per-step exponentials.
Matrix propagator(const HamiltonianSchedule& schedule, int steps);

// |tr(U^dagger V)| / d, insensitive to global phase.
double gate_fidelity(const Matrix& u, const Matrix& v);

// d/dt estimates of the stored marginals: central differences at interior
// points, one-sided second-order stencils at the ends.
Eigen::MatrixXd prob_rates(const EvolutionTrace& trace);

} // namespace gatecost
