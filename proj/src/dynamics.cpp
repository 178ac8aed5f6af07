#include "gatecost/dynamics.hpp"

#include <cmath>

#include "gatecost/errors.hpp"
#include "gatecost/information.hpp"

namespace gatecost {

namespace {

void check_schedule(const HamiltonianSchedule& schedule, int steps) {
    if (schedule.dim < 1 || !(schedule.tau > 0.0) || !schedule.at) {
        throw InputError("schedule: needs dim >= 1, tau > 0 and an evaluator");
    }
    if (steps < kMinSteps) {
        throw InputError("steps must be at least " + std::to_string(kMinSteps));
    }
}

Matrix sample(const HamiltonianSchedule& schedule, double t) {
    Matrix h = schedule.at(t);
    if (h.rows() != schedule.dim || h.cols() != schedule.dim) {
        throw InputError("schedule evaluator returned a wrong-sized matrix");
    }
    require_hermitian(h, "schedule evaluator");
    return h;
}

} // namespace

HamiltonianSchedule zero_schedule(int dim, double tau) {
    return {dim, tau, [dim](double) { return Matrix::Zero(dim, dim); }};
}

HamiltonianSchedule constant_schedule(const Matrix& h, double tau) {
    require_hermitian(h, "constant_schedule");
    const int dim = static_cast<int>(h.rows());
    return {dim, tau, [h](double) { return h; }};
}

EvolutionTrace evolve(const HamiltonianSchedule& schedule, const Vector& psi0, int steps) {
    check_schedule(schedule, steps);
    if (psi0.size() != schedule.dim) {
        throw InputError("evolve: state dimension does not match the schedule");
    }
    require_normalized(psi0, "evolve");

    const int d = schedule.dim;
    const double dt = schedule.tau / steps;

    EvolutionTrace trace;
    trace.tau = schedule.tau;
    trace.times.resize(steps + 1);
    trace.states.reserve(steps + 1);
    trace.probs.resize(steps + 1, d);
    trace.h_norms.resize(steps + 1);
    trace.surrogate.resize(steps + 1);

    Vector psi = psi0;
    for (int j = 0; j <= steps; ++j) {
        const double t = (j == steps) ? schedule.tau : j * dt;
        trace.times[j] = t;
        if (j > 0) {
            const Matrix u = pauli_rotation_exp(sample(schedule, (j - 1) * dt + 0.5 * dt), dt);
            psi = u * psi;
            const double drift = std::abs(psi.squaredNorm() - 1.0);
            if (drift > 1e-6) {
                throw IntegrationError("evolve: normalization drift " + std::to_string(drift));
            }
        }
        trace.states.push_back(psi);
        const Eigen::VectorXd p = psi.cwiseAbs2();
        trace.probs.row(j) = p;
        trace.h_norms[j] = operator_norm(sample(schedule, t));
        trace.surrogate[j] = surrogate_entropy(p / p.sum());
    }
    return trace;
}

Matrix propagator(const HamiltonianSchedule& schedule, int steps) {
    check_schedule(schedule, steps);
    const double dt = schedule.tau / steps;
    Matrix u = Matrix::Identity(schedule.dim, schedule.dim);
    for (int k = 0; k < steps; ++k) {
        u = pauli_rotation_exp(sample(schedule, k * dt + 0.5 * dt), dt) * u;
    }
    if (!is_unitary(u)) {
        throw IntegrationError("propagator: accumulated product lost unitarity");
    }
    return u;
}

double gate_fidelity(const Matrix& u, const Matrix& v) {
    if (u.rows() != u.cols() || u.rows() != v.rows() || v.rows() != v.cols()) {
        throw InputError("gate_fidelity: dimension mismatch");
    }
    return std::abs((u.adjoint() * v).trace()) / static_cast<double>(u.rows());
}

Eigen::MatrixXd prob_rates(const EvolutionTrace& trace) {
    const int m = trace.steps();
    if (m < 2) {
        throw InputError("prob_rates: trace grid is degenerate");
    }
    const double dt = trace.dt();
    Eigen::MatrixXd rates(m + 1, trace.dim());
    rates.row(0) = (-3.0 * trace.probs.row(0) + 4.0 * trace.probs.row(1) - trace.probs.row(2)) / (2.0 * dt);
    for (int j = 1; j < m; ++j) {
        rates.row(j) = (trace.probs.row(j + 1) - trace.probs.row(j - 1)) / (2.0 * dt);
    }
    rates.row(m) = (3.0 * trace.probs.row(m) - 4.0 * trace.probs.row(m - 1) + trace.probs.row(m - 2)) / (2.0 * dt);
    return rates;
}

} // namespace gatecost
