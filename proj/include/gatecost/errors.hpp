#pragma once

#include <stdexcept>

namespace gatecost {

// Caller-supplied values that fail a precondition (dimensions, ranges,
// malformed configuration).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A structural contract was broken, e.g. a non-Hermitian operator handed
// to a routine that requires one.
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// Numerical propagation left its validity envelope (lost normalization,
// eigensolver failure).
struct IntegrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem problems while writing tables or reports.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace gatecost
