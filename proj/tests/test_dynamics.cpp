#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gatecost/dynamics.hpp"
#include "gatecost/errors.hpp"
#include "gatecost/protocols.hpp"

using namespace gatecost;

namespace {

constexpr double kPi = std::numbers::pi;

Vector plus_state() {
    Vector v(2);
    v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    return v;
}

HamiltonianSchedule smooth_random_schedule(int dim, double tau, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto draw = [&]() {
        Matrix a(dim, dim);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) a(r, c) = Complex(gauss(rng), gauss(rng));
        return Matrix(0.5 * (a + a.adjoint()));
    };
    const Matrix base = draw(), wave = draw();
    return {dim, tau, [base, wave, tau](double t) {
                return Matrix(base + std::sin(2.0 * kPi * t / tau) * wave);
            }};
}

} // namespace

TEST_CASE("evolve resets |+> under the hadamard schedule") {
    const EvolutionTrace trace = evolve(hadamard_schedule(linear_protocol(1.0)), plus_state(), 4096);
    CHECK(trace.probs(trace.steps(), 0) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::abs(trace.states.back().squaredNorm() - 1.0) <= 1e-9);
    for (int j = 0; j <= trace.steps(); ++j) {
        CHECK(std::abs(trace.probs.row(j).sum() - 1.0) <= 1e-9);
        CHECK(trace.h_norms[j] >= 0.0);
        CHECK(trace.surrogate[j] >= 0.0);
    }
}

TEST_CASE("zero Hamiltonian leaves the state alone") {
    std::mt19937_64 rng(41);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector psi(3);
    for (int n = 0; n < 3; ++n) psi[n] = Complex(gauss(rng), gauss(rng));
    psi.normalize();

    const EvolutionTrace trace = evolve(zero_schedule(3, 2.0), psi, 32);
    for (const Vector& state : trace.states) {
        CHECK((state - psi).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("eigenstate evolution only picks up phase") {
    Vector zero_state(2);
    zero_state << 1, 0;
    const EvolutionTrace trace =
        evolve(constant_schedule(Matrix(0.5 * pauli_z()), 1.0), zero_state, 64);
    for (int j = 0; j <= trace.steps(); ++j) {
        CHECK(trace.probs(j, 0) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("evolve input validation") {
    CHECK_THROWS_AS(evolve(zero_schedule(3, 1.0), plus_state(), 64), InputError);
    CHECK_THROWS_AS(evolve(zero_schedule(2, 1.0), plus_state(), 8), InputError);

    Vector unnormalized(2);
    unnormalized << 1.0, 1.0;
    CHECK_THROWS_AS(evolve(zero_schedule(2, 1.0), unnormalized, 64), InputError);

    HamiltonianSchedule crooked{2, 1.0, [](double) {
                                    Matrix m(2, 2);
                                    m << 0, 1, 2, 0;
                                    return m;
                                }};
    CHECK_THROWS_AS(evolve(crooked, plus_state(), 64), ContractViolation);
}

TEST_CASE("propagator realizes the hadamard gate up to a global phase") {
    const Matrix u = propagator(hadamard_schedule(linear_protocol(1.0)), 4096);
    CHECK(gate_fidelity(u, hadamard_gate()) == doctest::Approx(1.0).epsilon(1e-8));

    // gauge: U = exp(-i pi/2) H, so tr(U H)/2 = -i
    const Complex phase = (u * hadamard_gate()).trace() / 2.0;
    CHECK(std::abs(phase - Complex(0.0, -1.0)) <= 1e-8);

    const Matrix id = propagator(zero_schedule(2, 1.0), 64);
    CHECK(max_abs(id - Matrix::Identity(2, 2)) <= 1e-12);

    for (double a : {-0.7, 0.4, 1.3}) {
        const Matrix v = propagator(hadamard_schedule(single_mode_protocol(a, 1.0)), 1024);
        CHECK(gate_fidelity(v, hadamard_gate()) == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("gate_fidelity basics") {
    const Matrix h = hadamard_gate();
    CHECK(gate_fidelity(h, h) == doctest::Approx(1.0).epsilon(1e-15));
    const Complex phase = std::exp(Complex(0.0, 0.773));
    CHECK(gate_fidelity(h, Matrix(phase * h)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(gate_fidelity(Matrix::Identity(2, 2), pauli_x()) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK_THROWS_AS(gate_fidelity(h, Matrix::Identity(3, 3)), InputError);
}

TEST_CASE("propagators of random schedules are unitary") {
    std::mt19937_64 rng(42);
    for (int rep = 0; rep < 10; ++rep) {
        const int dim = rep % 2 == 0 ? 2 : 4;
        const Matrix u = propagator(smooth_random_schedule(dim, 1.0, rng), 256);
        CHECK(is_unitary(u));
    }
}

TEST_CASE("reset works for any horizon") {
    for (double tau : {0.5, 2.0, 7.0}) {
        const EvolutionTrace trace =
            evolve(hadamard_schedule(linear_protocol(tau)), plus_state(), 1024);
        CHECK(trace.tau == tau);
        CHECK(trace.probs(trace.steps(), 0) == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("doubling steps leaves the hadamard endpoint unchanged") {
    const HamiltonianSchedule schedule = hadamard_schedule(linear_protocol(1.0));
    const EvolutionTrace coarse = evolve(schedule, plus_state(), 2048);
    const EvolutionTrace fine = evolve(schedule, plus_state(), 4096);
    CHECK((coarse.states.back() - fine.states.back()).cwiseAbs().maxCoeff() <= 1e-8);
}

TEST_CASE("rate bound holds pointwise along smooth traces") {
    std::mt19937_64 rng(43);
    std::normal_distribution<double> gauss(0.0, 1.0);

    std::vector<std::pair<HamiltonianSchedule, Vector>> cases;
    cases.emplace_back(hadamard_schedule(linear_protocol(1.0)), plus_state());
    cases.emplace_back(hadamard_schedule(single_mode_protocol(0.3, 1.0)), plus_state());
    for (int rep = 0; rep < 6; ++rep) {
        const int dim = rep % 2 == 0 ? 2 : 4;
        HamiltonianSchedule schedule = smooth_random_schedule(dim, 1.0, rng);
        // Gentle fields keep the finite-difference error inside the stated
        // tolerance budget.
        const Matrix h0 = schedule.at(0.25);
        auto inner = schedule.at;
        const double scale = 1.0 / std::max(1.0, operator_norm(h0));
        schedule.at = [inner, scale](double t) { return Matrix(scale * inner(t)); };
        Vector psi(dim);
        for (int n = 0; n < dim; ++n) psi[n] = Complex(gauss(rng), gauss(rng));
        psi.normalize();
        cases.emplace_back(schedule, psi);
    }

    for (const auto& [schedule, psi0] : cases) {
        const EvolutionTrace trace = evolve(schedule, psi0, 1024);
        const Eigen::MatrixXd rates = prob_rates(trace);
        const double dt = trace.dt();
        const double tol = 10.0 * dt * dt + 1e-9;
        for (int j = 0; j <= trace.steps(); ++j) {
            for (int n = 0; n < trace.dim(); ++n) {
                CHECK(std::abs(rates(j, n)) <=
                      2.0 * trace.h_norms[j] * std::sqrt(trace.probs(j, n)) + tol);
            }
        }
    }
}

TEST_CASE("prob_rates needs a non-degenerate grid") {
    EvolutionTrace trace;
    trace.tau = 1.0;
    trace.times = {0.0, 1.0};
    Vector v(2);
    v << 1, 0;
    trace.states = {v, v};
    trace.probs.resize(2, 2);
    trace.probs << 1, 0, 1, 0;
    CHECK_THROWS_AS(prob_rates(trace), InputError);
}
