#pragma once

#include <vector>

#include "gatecost/dynamics.hpp"

namespace gatecost {

inline constexpr int kDefaultCostSamples = 1 << 17;
inline constexpr int kMinCostSamples = 64;

// Control phase phi(t) = pi t / tau + sum_k A_k sin(2 pi k t / tau).
// The sine terms vanish at both ends, so phi(0) = 0 and phi(tau) = pi
// hold for any coefficient choice.
struct PhaseProtocol {
    double tau = 1.0;
    std::vector<double> fourier; // A_1 .. A_K
};

PhaseProtocol linear_protocol(double tau = 1.0);
PhaseProtocol single_mode_protocol(double amplitude, double tau = 1.0);

double phi(const PhaseProtocol& protocol, double t);
double phi_dot(const PhaseProtocol& protocol, double t);

// H(t) = phi_dot(t) / (2 sqrt 2) * (sigma_x + sigma_z); the norm is
// |phi_dot(t)| / 2 since ||sigma_x + sigma_z|| = sqrt 2.
HamiltonianSchedule hadamard_schedule(const PhaseProtocol& protocol);

// Accumulated field magnitude C = integral of |phi_dot| over [0, tau].
// Trapezoid on a uniform grid, with the sign changes of phi_dot located
// by bisection and inserted as extra breakpoints.
double cost_numeric(const PhaseProtocol& protocol, int samples = kDefaultCostSamples);

// Closed form of the cost for the one-mode family, piecewise in the
// amplitude with branch boundaries at |A| = 1/2.
double cost_closed_form_single_mode(double amplitude);

struct OptimizeResult {
    PhaseProtocol protocol;
    double cost = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Derivative-free simplex minimization of cost_numeric over the Fourier
// coefficients. The |phi_dot| kinks rule out gradient methods.
OptimizeResult optimize_protocol(int modes, const std::vector<double>& init,
                                 int max_iters = 500, double tol = 1e-9,
                                 double tau = 1.0, int cost_samples = 1 << 14);

// Cooper-pair-box Hamiltonian -1/2 (E_J sigma_x + E sigma_z).
Matrix cooper_pair_box(double josephson_energy, double effective_charging_energy);

} // namespace gatecost
