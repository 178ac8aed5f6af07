#include "gatecost/codes.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <ostream>
#include <string_view>

#include "gatecost/errors.hpp"
#include "gatecost/format.hpp"
#include "gatecost/information.hpp"

namespace gatecost {

namespace {

// Applies a tensor product of I/X/Z factors to a basis expansion. The
// leftmost character acts on the most significant bit.
Vector apply_pauli_string(std::string_view ops, const Vector& v) {
    const int n = static_cast<int>(ops.size());
    unsigned x_mask = 0, z_mask = 0;
    for (int j = 0; j < n; ++j) {
        const unsigned bit = 1u << (n - 1 - j);
        if (ops[j] == 'X') x_mask |= bit;
        if (ops[j] == 'Z') z_mask |= bit;
    }
    Vector out = Vector::Zero(v.size());
    for (unsigned b = 0; b < static_cast<unsigned>(v.size()); ++b) {
        if (v[b] == Complex(0.0, 0.0)) continue;
        const double sign = (std::popcount(b & z_mask) % 2 == 0) ? 1.0 : -1.0;
        out[b ^ x_mask] += sign * v[b];
    }
    return out;
}

} // namespace

CodeSpec shor_code() {
    CodeSpec code;
    code.name = "shor";
    code.n_physical = 9;
    const int dim = 1 << 9;
    code.encode0 = Vector::Zero(dim);
    code.encode1 = Vector::Zero(dim);
    const double amp = 1.0 / (2.0 * std::sqrt(2.0));
    for (unsigned choice = 0; choice < 8; ++choice) {
        unsigned index = 0;
        for (int block = 0; block < 3; ++block) {
            if (choice & (1u << block)) {
                index |= 0b111u << (3 * block);
            }
        }
        const int flipped_blocks = std::popcount(choice);
        code.encode0[index] = amp;
        code.encode1[index] = (flipped_blocks % 2 == 0) ? amp : -amp;
    }
    return code;
}

CodeSpec perfect_code() {
    CodeSpec code;
    code.name = "perfect";
    code.n_physical = 5;
    const int dim = 1 << 5;

    Vector v = Vector::Zero(dim);
    v[0] = 1.0;
    constexpr std::array<std::string_view, 4> generators = {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};
    for (const auto& g : generators) {
        v = 0.5 * (v + apply_pauli_string(g, v));
    }
    // Overall sign fixed so that <00000|0_L> = -1/4.
    v *= -1.0 / v.norm();

    code.encode0 = v;
    code.encode1 = apply_pauli_string("XXXXX", v);
    return code;
}

Vector encode(const CodeSpec& code, Complex alpha, Complex beta) {
    const double weight = std::norm(alpha) + std::norm(beta);
    if (std::abs(weight - 1.0) > kNormalizationTol) {
        throw InputError("encode: logical amplitudes are not normalized");
    }
    return alpha * code.encode0 + beta * code.encode1;
}

double encoded_marginal_bits(const CodeSpec& code, Complex alpha, Complex beta) {
    const Vector psi = encode(code, alpha, beta);
    return shannon_nats(marginal_probs(psi)) / std::log(2.0);
}

double code_cost_bound_bits(const CodeSpec& code, double single_qubit_integral) {
    if (!(single_qubit_integral >= 0.0)) {
        throw InputError("code_cost_bound_bits: integral must be nonnegative");
    }
    const double per_qubit = kBoundPrefactor * std::sqrt(2.0) * std::log2(2.0);
    return per_qubit * code.n_physical * single_qubit_integral;
}

void write_state_csv(const Vector& state, int n_qubits, std::ostream& out) {
    if (state.size() != (Eigen::Index{1} << n_qubits)) {
        throw InputError("write_state_csv: state size does not match qubit count");
    }
    out << "index,basis,re,im\n";
    for (Eigen::Index i = 0; i < state.size(); ++i) {
        std::string basis(n_qubits, '0');
        for (int j = 0; j < n_qubits; ++j) {
            if (i & (Eigen::Index{1} << (n_qubits - 1 - j))) basis[j] = '1';
        }
        out << i << ',' << basis << ',' << format_g17(state[i].real()) << ','
            << format_g17(state[i].imag()) << '\n';
    }
}

} // namespace gatecost
