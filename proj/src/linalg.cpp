#include "gatecost/linalg.hpp"

#include <cmath>

#include "gatecost/errors.hpp"

namespace gatecost {

namespace {

const Complex kI(0.0, 1.0);

void require_finite(const Matrix& m, const char* what) {
    if (!m.allFinite()) {
        throw InputError(std::string(what) + ": non-finite entries");
    }
}

} // namespace

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Matrix hadamard_gate() {
    Matrix m(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    m << s, s, s, -s;
    return m;
}

double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return max_abs(m - m.adjoint()) <= tol;
}

bool is_unitary(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    Matrix gram = m.adjoint() * m;
    gram -= Matrix::Identity(m.rows(), m.cols());
    return max_abs(gram) <= tol;
}

bool is_normalized(const Vector& v, double tol) {
    return std::abs(v.squaredNorm() - 1.0) <= tol;
}

void require_hermitian(const Matrix& m, const char* what) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw InputError(std::string(what) + ": matrix must be square and non-empty");
    }
    require_finite(m, what);
    if (!is_hermitian(m)) {
        throw ContractViolation(std::string(what) + ": matrix is not Hermitian");
    }
}

void require_normalized(const Vector& v, const char* what) {
    if (v.size() < 1 || !v.allFinite() || !is_normalized(v)) {
        throw InputError(std::string(what) + ": state is not normalized");
    }
}

double operator_norm(const Matrix& hermitian) {
    require_hermitian(hermitian, "operator_norm");
    const auto d = hermitian.rows();
    if (d == 1) {
        return std::abs(hermitian(0, 0).real());
    }
    if (d == 2) {
        // H = c*I + a.sigma with c = (h00 + h11)/2 and |a| the Bloch radius;
        // eigenvalues are c +- |a|, so the norm is |c| + |a|.
        const double c = 0.5 * (hermitian(0, 0).real() + hermitian(1, 1).real());
        const double az = 0.5 * (hermitian(0, 0).real() - hermitian(1, 1).real());
        const double r = std::hypot(az, std::abs(hermitian(0, 1)));
        return std::abs(c) + r;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw IntegrationError("operator_norm: Hermitian eigensolver did not converge");
    }
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

Matrix pauli_rotation_exp(const Matrix& hermitian, double dt) {
    require_hermitian(hermitian, "pauli_rotation_exp");
    if (!std::isfinite(dt)) {
        throw InputError("pauli_rotation_exp: dt must be finite");
    }
    const auto d = hermitian.rows();
    if (d == 2) {
        const double c = 0.5 * (hermitian(0, 0).real() + hermitian(1, 1).real());
        const double az = 0.5 * (hermitian(0, 0).real() - hermitian(1, 1).real());
        const Complex axy = hermitian(0, 1); // a_x - i a_y
        const double r = std::hypot(az, std::abs(axy));
        const double theta = r * dt;
        Matrix u(2, 2);
        if (r * std::abs(dt) < 1e-300) {
            u = Matrix::Identity(2, 2);
        } else {
            const Complex f = -kI * std::sin(theta) / r;
            u << std::cos(theta) + f * az, f * axy,
                 f * std::conj(axy), std::cos(theta) - f * az;
        }
        return std::exp(-kI * c * dt) * u;
    }

    // Scaling and squaring on the Taylor series of exp(-i H dt).
    Matrix a = -kI * dt * hermitian;
    int squarings = 0;
    double scale = max_abs(a) * static_cast<double>(d);
    while (scale > 0.5 && squarings < 64) {
        a *= 0.5;
        scale *= 0.5;
        ++squarings;
    }
    Matrix result = Matrix::Identity(d, d);
    Matrix term = Matrix::Identity(d, d);
    for (int k = 1; k <= 40; ++k) {
        term = (term * a) / static_cast<double>(k);
        result += term;
        if (max_abs(term) < 1e-20) break;
    }
    for (int s = 0; s < squarings; ++s) {
        result = result * result;
    }
    Matrix gram = result.adjoint() * result - Matrix::Identity(d, d);
    if (max_abs(gram) > 1e-13) {
        // One Newton-Schulz step toward the unitary polar factor.
        result = 0.5 * result * (3.0 * Matrix::Identity(d, d) - result.adjoint() * result);
        gram = result.adjoint() * result - Matrix::Identity(d, d);
    }
    if (max_abs(gram) > kUnitaryTol) {
        throw IntegrationError("pauli_rotation_exp: result failed the unitarity check");
    }
    return result;
}

Complex inner_product(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) {
        throw InputError("inner_product: dimension mismatch");
    }
    return a.dot(b); // Eigen conjugates the left operand
}

} // namespace gatecost
