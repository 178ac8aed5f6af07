#pragma once

#include "gatecost/linalg.hpp"

namespace gatecost {

// Probabilities below this are treated as exact zeros inside logarithms.
inline constexpr double kProbFloor = 1e-15;

bool is_distribution(const Eigen::VectorXd& probs, double tol = kNormalizationTol);

// Logical-basis marginal p_n = |<n|psi>|^2.
Eigen::VectorXd marginal_probs(const Vector& psi);

// -sum p_n ln p_n, with 0 ln 0 = 0.
double shannon_nats(const Eigen::VectorXd& probs);

// -sum sqrt(p_n) ln p_n, the trajectory-bound surrogate.
double surrogate_entropy(const Eigen::VectorXd& probs);

// Largest value the surrogate can take on a d-outcome distribution.
double surrogate_entropy_max(int dim);

// Shannon information change in bits, (S_out - S_in) / ln 2. May be
// negative; bound checks compare against the magnitude.
double delta_info_bits(const Vector& psi_in, const Vector& psi_out);

// von Neumann entropy of a pure state: identically zero, kept so the
// contrast with the marginal information is testable.
double vn_entropy_pure(const Vector& psi);

} // namespace gatecost
