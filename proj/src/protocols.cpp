#include "gatecost/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gatecost/errors.hpp"

namespace gatecost {

namespace {

constexpr double kPi = std::numbers::pi;

void check_protocol(const PhaseProtocol& protocol) {
    if (!(protocol.tau > 0.0) || !std::isfinite(protocol.tau)) {
        throw InputError("protocol: tau must be a positive real");
    }
    for (double a : protocol.fourier) {
        if (!std::isfinite(a)) throw InputError("protocol: non-finite Fourier coefficient");
    }
}

void check_time(const PhaseProtocol& protocol, double t) {
    const double slack = 1e-12 * protocol.tau;
    if (!(t >= -slack && t <= protocol.tau + slack)) {
        throw InputError("protocol: t outside [0, tau]");
    }
}

double arccsc(double x) {
    return std::asin(1.0 / x);
}

} // namespace

PhaseProtocol linear_protocol(double tau) {
    return {tau, {}};
}

PhaseProtocol single_mode_protocol(double amplitude, double tau) {
    return {tau, {amplitude}};
}

double phi(const PhaseProtocol& protocol, double t) {
    check_protocol(protocol);
    check_time(protocol, t);
    double value = kPi * t / protocol.tau;
    for (std::size_t k = 0; k < protocol.fourier.size(); ++k) {
        value += protocol.fourier[k] * std::sin(2.0 * kPi * (k + 1) * t / protocol.tau);
    }
    return value;
}

double phi_dot(const PhaseProtocol& protocol, double t) {
    check_protocol(protocol);
    check_time(protocol, t);
    double value = kPi / protocol.tau;
    for (std::size_t k = 0; k < protocol.fourier.size(); ++k) {
        const double w = 2.0 * kPi * (k + 1) / protocol.tau;
        value += protocol.fourier[k] * w * std::cos(w * t);
    }
    return value;
}

HamiltonianSchedule hadamard_schedule(const PhaseProtocol& protocol) {
    check_protocol(protocol);
    const Matrix generator = (pauli_x() + pauli_z()) / (2.0 * std::sqrt(2.0));
    return {2, protocol.tau,
            [protocol, generator](double t) { return Matrix(phi_dot(protocol, t) * generator); }};
}

double cost_numeric(const PhaseProtocol& protocol, int samples) {
    check_protocol(protocol);
    if (samples < kMinCostSamples) {
        throw InputError("cost_numeric: samples must be at least " + std::to_string(kMinCostSamples));
    }

    const double tau = protocol.tau;
    const double h = tau / samples;
    std::vector<double> grid(samples + 1);
    std::vector<double> values(samples + 1);
    for (int i = 0; i <= samples; ++i) {
        grid[i] = (i == samples) ? tau : i * h;
        values[i] = phi_dot(protocol, grid[i]);
    }

    // Locate the zeros of phi_dot and fold them into the grid so the
    // trapezoid rule never integrates across a kink of |phi_dot|.
    std::vector<double> roots;
    for (int i = 0; i < samples; ++i) {
        if (values[i] == 0.0 || values[i] * values[i + 1] >= 0.0) continue;
        double lo = grid[i], hi = grid[i + 1];
        double flo = values[i];
        while (hi - lo > 1e-12) {
            const double mid = 0.5 * (lo + hi);
            const double fmid = phi_dot(protocol, mid);
            if (fmid == 0.0) { lo = hi = mid; break; }
            if ((flo < 0.0) == (fmid < 0.0)) {
                lo = mid;
                flo = fmid;
            } else {
                hi = mid;
            }
        }
        roots.push_back(0.5 * (lo + hi));
    }

    double cost = 0.0;
    std::size_t next_root = 0;
    for (int i = 0; i < samples; ++i) {
        double a = grid[i];
        double fa = std::abs(values[i]);
        while (next_root < roots.size() && roots[next_root] < grid[i + 1]) {
            const double r = roots[next_root++];
            const double fr = std::abs(phi_dot(protocol, r));
            cost += 0.5 * (fa + fr) * (r - a);
            a = r;
            fa = fr;
        }
        cost += 0.5 * (fa + std::abs(values[i + 1])) * (grid[i + 1] - a);
    }
    return cost;
}

double cost_closed_form_single_mode(double amplitude) {
    if (std::abs(amplitude) < 0.5) {
        return kPi;
    }
    const double root = std::sqrt(4.0 * amplitude * amplitude - 1.0);
    if (amplitude >= 0.5) {
        return 2.0 * (arccsc(2.0 * amplitude) + root);
    }
    return 2.0 * (-arccsc(2.0 * amplitude) + root);
}

OptimizeResult optimize_protocol(int modes, const std::vector<double>& init,
                                 int max_iters, double tol, double tau, int cost_samples) {
    if (modes < 0) throw InputError("optimize_protocol: modes must be >= 0");
    if (static_cast<int>(init.size()) != modes) {
        throw InputError("optimize_protocol: init must have one entry per mode");
    }

    auto objective = [&](const std::vector<double>& coeffs) {
        return cost_numeric(PhaseProtocol{tau, coeffs}, cost_samples);
    };

    if (modes == 0) {
        PhaseProtocol best{tau, {}};
        return {best, cost_numeric(best, cost_samples), 0, true};
    }

    // Nelder-Mead with the standard reflection/expansion/contraction/shrink
    // coefficients (1, 2, 0.5, 0.5); converged when the simplex cost spread
    // falls below tol.
    const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
    const int n = modes;
    std::vector<std::vector<double>> verts(n + 1, init);
    for (int i = 0; i < n; ++i) {
        verts[i + 1][i] += 0.25;
    }
    std::vector<double> cost(n + 1);
    for (int i = 0; i <= n; ++i) cost[i] = objective(verts[i]);

    auto order = [&]() {
        std::vector<int> idx(n + 1);
        for (int i = 0; i <= n; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return cost[a] < cost[b]; });
        std::vector<std::vector<double>> v2(n + 1);
        std::vector<double> c2(n + 1);
        for (int i = 0; i <= n; ++i) { v2[i] = verts[idx[i]]; c2[i] = cost[idx[i]]; }
        verts.swap(v2);
        cost.swap(c2);
    };

    int iter = 0;
    bool converged = false;
    for (; iter < max_iters; ++iter) {
        order();
        if (cost[n] - cost[0] < tol) {
            converged = true;
            break;
        }
        std::vector<double> centroid(n, 0.0);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) centroid[j] += verts[i][j];
        }
        for (double& c : centroid) c /= n;

        auto blend = [&](const std::vector<double>& from, double scale) {
            std::vector<double> p(n);
            for (int j = 0; j < n; ++j) p[j] = centroid[j] + scale * (from[j] - centroid[j]);
            return p;
        };

        const std::vector<double> reflected = blend(verts[n], -alpha);
        const double f_reflected = objective(reflected);
        if (f_reflected < cost[0]) {
            const std::vector<double> expanded = blend(verts[n], -gamma);
            const double f_expanded = objective(expanded);
            if (f_expanded < f_reflected) {
                verts[n] = expanded;
                cost[n] = f_expanded;
            } else {
                verts[n] = reflected;
                cost[n] = f_reflected;
            }
        } else if (f_reflected < cost[n - 1]) {
            verts[n] = reflected;
            cost[n] = f_reflected;
        } else {
            const bool outside = f_reflected < cost[n];
            const std::vector<double> contracted =
                outside ? blend(reflected, rho) : blend(verts[n], rho);
            const double f_contracted = objective(contracted);
            if (f_contracted < (outside ? f_reflected : cost[n])) {
                verts[n] = contracted;
                cost[n] = f_contracted;
            } else {
                for (int i = 1; i <= n; ++i) {
                    for (int j = 0; j < n; ++j) {
                        verts[i][j] = verts[0][j] + sigma * (verts[i][j] - verts[0][j]);
                    }
                    cost[i] = objective(verts[i]);
                }
            }
        }
    }
    order();
    return {PhaseProtocol{tau, verts[0]}, cost[0], iter, converged};
}

Matrix cooper_pair_box(double josephson_energy, double effective_charging_energy) {
    if (!std::isfinite(josephson_energy) || !std::isfinite(effective_charging_energy)) {
        throw InputError("cooper_pair_box: parameters must be finite");
    }
    return Matrix(-0.5 * (josephson_energy * pauli_x() + effective_charging_energy * pauli_z()));
}

} // namespace gatecost
