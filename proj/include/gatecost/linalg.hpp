#pragma once

#include <Eigen/Dense>
#include <complex>

namespace gatecost {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-9;
inline constexpr double kNormalizationTol = 1e-9;

// Prefactor of the rate and information bounds. Natural units, hbar = 1;
// kept as a named constant so a units-aware mode has a single knob.
inline constexpr double kBoundPrefactor = 2.0;

Matrix pauli_x();
Matrix pauli_z();
Matrix hadamard_gate();

// Largest elementwise |m_ij|.
double max_abs(const Matrix& m);

bool is_hermitian(const Matrix& m, double tol = kHermitianTol);
bool is_unitary(const Matrix& m, double tol = kUnitaryTol);
bool is_normalized(const Vector& v, double tol = kNormalizationTol);

void require_hermitian(const Matrix& m, const char* what);
void require_normalized(const Vector& v, const char* what);

// Operator norm of a Hermitian matrix: the largest |eigenvalue|.
// d = 2 is evaluated in closed form from the Pauli decomposition,
// larger dimensions go through a Hermitian eigensolver.
double operator_norm(const Matrix& hermitian);

// exp(-i * H * dt) for Hermitian H. d = 2 uses the closed cos/sin
// rotation formula, larger dimensions use scaling-and-squaring with a
// unitarity check on the result.
Matrix pauli_rotation_exp(const Matrix& hermitian, double dt);

// <a|b>, conjugating the first argument.
Complex inner_product(const Vector& a, const Vector& b);

} // namespace gatecost
