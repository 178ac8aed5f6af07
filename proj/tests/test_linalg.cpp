#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gatecost/errors.hpp"
#include "gatecost/linalg.hpp"

using namespace gatecost;

namespace {

Matrix random_hermitian(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix a(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) a(r, c) = Complex(gauss(rng), gauss(rng));
    return 0.5 * (a + a.adjoint());
}

Vector random_state(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v(dim);
    for (int n = 0; n < dim; ++n) v[n] = Complex(gauss(rng), gauss(rng));
    v.normalize();
    return v;
}

// Independent norm oracle: power iteration on M^2 converges to the largest
// eigenvalue of M^2, whose square root is the largest |eigenvalue| of M.
double power_iteration_norm(const Matrix& m) {
    const Matrix m2 = m * m;
    Vector v = Vector::Ones(m.rows()).normalized();
    double lambda = 0.0;
    for (int it = 0; it < 20000; ++it) {
        Vector w = m2 * v;
        const double next = w.norm();
        w /= next;
        if (std::abs(next - lambda) < 1e-14 * std::max(1.0, next) && it > 10) {
            lambda = next;
            break;
        }
        lambda = next;
        v = w;
    }
    return std::sqrt(lambda);
}

// Plain truncated exponential series, no scaling tricks.
Matrix series_exp(const Matrix& h, double dt, int terms) {
    const Complex mi(0.0, -1.0);
    Matrix a = mi * dt * h;
    Matrix result = Matrix::Identity(h.rows(), h.cols());
    Matrix term = Matrix::Identity(h.rows(), h.cols());
    for (int k = 1; k < terms; ++k) {
        term = (term * a) / static_cast<double>(k);
        result += term;
    }
    return result;
}

} // namespace

TEST_CASE("operator_norm closed-form and oracle cases") {
    CHECK(operator_norm(pauli_x() + pauli_z()) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(operator_norm(Matrix::Zero(3, 3)) == 0.0);
    CHECK(operator_norm(Matrix::Zero(2, 2)) == 0.0);
    CHECK(operator_norm(Matrix::Identity(2, 2)) == doctest::Approx(1.0).epsilon(1e-14));

    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const Matrix m = random_hermitian(8, rng);
        CHECK(std::abs(operator_norm(m) - power_iteration_norm(m)) <= 1e-9);
    }
}

TEST_CASE("operator_norm is absolutely homogeneous") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> scale(-3.0, 3.0);
    for (int rep = 0; rep < 50; ++rep) {
        const Matrix m = random_hermitian(rep % 2 == 0 ? 2 : 5, rng);
        const double c = scale(rng);
        CHECK(operator_norm(Matrix(c * m)) ==
              doctest::Approx(std::abs(c) * operator_norm(m)).epsilon(1e-9));
    }
}

TEST_CASE("scalar and zero-step edges") {
    Matrix one_by_one(1, 1);
    one_by_one << -2.5;
    CHECK(operator_norm(one_by_one) == doctest::Approx(2.5).epsilon(1e-15));

    std::mt19937_64 rng(17);
    const Matrix h = random_hermitian(3, rng);
    CHECK(max_abs(pauli_rotation_exp(h, 0.0) - Matrix::Identity(3, 3)) <= 1e-15);
}

TEST_CASE("operator_norm input contracts") {
    Matrix m(2, 2);
    m << 1, Complex(0, 1), Complex(0, 1), 1; // not Hermitian
    CHECK_THROWS_AS(operator_norm(m), ContractViolation);

    Matrix bad(2, 2);
    bad << std::nan(""), 0, 0, 1;
    CHECK_THROWS_AS(operator_norm(bad), InputError);
}

TEST_CASE("pauli_rotation_exp closed-form cases") {
    const Matrix id = pauli_rotation_exp(Matrix::Zero(2, 2), 1.0);
    CHECK(max_abs(id - Matrix::Identity(2, 2)) <= 1e-15);

    // exp(-i (pi/2) sigma_x) = -i sigma_x
    const Matrix u = pauli_rotation_exp(Matrix(0.5 * M_PI * pauli_x()), 1.0);
    const Matrix expected = Complex(0.0, -1.0) * pauli_x();
    CHECK(max_abs(u - expected) <= 1e-12);
}

TEST_CASE("pauli_rotation_exp matches the series oracle") {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 50; ++rep) {
        const Matrix h = random_hermitian(2, rng);
        const Matrix u = pauli_rotation_exp(h, 0.1);
        CHECK(is_unitary(u));
        CHECK(max_abs(u - series_exp(h, 0.1, 64)) <= 1e-12);
    }
    for (int rep = 0; rep < 20; ++rep) {
        const Matrix h = random_hermitian(5, rng);
        const Matrix u = pauli_rotation_exp(h, 0.1);
        CHECK(is_unitary(u));
        CHECK(max_abs(u - series_exp(h, 0.1, 64)) <= 1e-12);
    }
}

TEST_CASE("pauli_rotation_exp stays unitary over random draws") {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> dts(-2.0, 2.0);
    for (int rep = 0; rep < 1000; ++rep) {
        const int dim = 2 + rep % 7;
        const Matrix h = random_hermitian(dim, rng);
        const Matrix u = pauli_rotation_exp(h, dts(rng));
        CHECK(is_unitary(u));
    }
}

TEST_CASE("pauli_rotation_exp rejects non-Hermitian generators") {
    Matrix m(2, 2);
    m << 0, 1, 2, 0;
    CHECK_THROWS_AS(pauli_rotation_exp(m, 0.5), ContractViolation);
}

TEST_CASE("inner_product basics") {
    std::mt19937_64 rng(15);
    const Vector psi = random_state(6, rng);
    CHECK(std::abs(inner_product(psi, psi) - Complex(1.0, 0.0)) <= 1e-12);

    Vector zero_state(2), one_state(2), plus(2);
    zero_state << 1, 0;
    one_state << 0, 1;
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    CHECK(std::abs(inner_product(zero_state, plus) - Complex(1.0 / std::sqrt(2.0), 0.0)) <= 1e-15);
    CHECK(std::abs(inner_product(zero_state, one_state)) == 0.0);

    Vector longer(3);
    longer << 1, 0, 0;
    CHECK_THROWS_AS(inner_product(zero_state, longer), InputError);
}

TEST_CASE("rank-1 Hoelder inequality holds for random draws") {
    std::mt19937_64 rng(16);
    for (int rep = 0; rep < 200; ++rep) {
        const int dim = (rep % 4 == 0) ? 2 : 2 + rep % 7;
        const Matrix h = random_hermitian(dim, rng);
        const Vector psi = random_state(dim, rng);
        const double norm = operator_norm(h);
        const Vector h_psi = h * psi;
        for (int n = 0; n < dim; ++n) {
            const double lhs = std::abs(h_psi[n] * std::conj(psi[n]));
            const double p_n = std::norm(psi[n]);
            CHECK(lhs <= norm * std::sqrt(p_n) + 1e-9);
        }
    }
}
