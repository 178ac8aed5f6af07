#include "gatecost/information.hpp"

#include <cmath>

#include "gatecost/errors.hpp"

namespace gatecost {

namespace {

void require_distribution(const Eigen::VectorXd& probs, const char* what) {
    if (!is_distribution(probs)) {
        throw InputError(std::string(what) + ": not a probability distribution");
    }
}

} // namespace

bool is_distribution(const Eigen::VectorXd& probs, double tol) {
    if (probs.size() < 1 || !probs.allFinite()) return false;
    if (probs.minCoeff() < -tol || probs.maxCoeff() > 1.0 + tol) return false;
    return std::abs(probs.sum() - 1.0) <= tol;
}

Eigen::VectorXd marginal_probs(const Vector& psi) {
    require_normalized(psi, "marginal_probs");
    return psi.cwiseAbs2();
}

double shannon_nats(const Eigen::VectorXd& probs) {
    require_distribution(probs, "shannon_nats");
    double s = 0.0;
    for (Eigen::Index n = 0; n < probs.size(); ++n) {
        const double p = probs[n];
        if (p > kProbFloor) s -= p * std::log(p);
    }
    return s;
}

double surrogate_entropy(const Eigen::VectorXd& probs) {
    require_distribution(probs, "surrogate_entropy");
    double s = 0.0;
    for (Eigen::Index n = 0; n < probs.size(); ++n) {
        const double p = probs[n];
        if (p > kProbFloor) s -= std::sqrt(p) * std::log(p);
    }
    return s;
}

double surrogate_entropy_max(int dim) {
    if (dim < 1) throw InputError("surrogate_entropy_max: dim must be positive");
    return std::sqrt(static_cast<double>(dim)) * std::log(static_cast<double>(dim));
}

double delta_info_bits(const Vector& psi_in, const Vector& psi_out) {
    if (psi_in.size() != psi_out.size()) {
        throw InputError("delta_info_bits: dimension mismatch");
    }
    const double s_in = shannon_nats(marginal_probs(psi_in));
    const double s_out = shannon_nats(marginal_probs(psi_out));
    return (s_out - s_in) / std::log(2.0);
}

double vn_entropy_pure(const Vector& psi) {
    require_normalized(psi, "vn_entropy_pure");
    return 0.0;
}

} // namespace gatecost
