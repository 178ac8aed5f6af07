#pragma once

#include <iosfwd>
#include <string>

#include "gatecost/linalg.hpp"

namespace gatecost {

// One logical qubit encoded in n_physical qubits. Basis convention is
// big-endian throughout: the leftmost ket symbol is the most significant
// index bit.
struct CodeSpec {
    std::string name;
    int n_physical = 0;
    Vector encode0;
    Vector encode1;
};

// Nine-qubit repetition-of-phase code, logical words
// (|000> +- |111>)^x3 / (2 sqrt 2).
CodeSpec shor_code();

// Five-qubit code in stabilizer form: sixteen +-1/4 terms per logical
// word, generators XZZXI, IXZZX, XIXZZ, ZXIXZ and logical flip XXXXX.
CodeSpec perfect_code();

// alpha * encode0 + beta * encode1 for normalized logical amplitudes.
Vector encode(const CodeSpec& code, Complex alpha, Complex beta);

// Shannon information (bits) of the computational-basis marginal of the
// encoded state.
double encoded_marginal_bits(const CodeSpec& code, Complex alpha, Complex beta);

// Cost bound for one logical gate on a non-interacting code:
// 2 sqrt(2) log2(2) * N * integral of the single-qubit ||H_1(t)||.
double code_cost_bound_bits(const CodeSpec& code, double single_qubit_integral);

// CSV export of a code state: index, basis string, real, imag.
void write_state_csv(const Vector& state, int n_qubits, std::ostream& out);

} // namespace gatecost
