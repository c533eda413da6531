// Error types shared across the library. Anything thrown out of the core
// derives from std::exception and is mapped to a ch_status at the C boundary.

#pragma once

#include <stdexcept>
#include <string>

namespace circhad {

// Operand orders do not match.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A documented precondition was violated (e.g. auditing a non-Hadamard row,
// building S from a row that fails a regularity condition).
struct PreconditionError : std::domain_error {
    using std::domain_error::domain_error;
};

// The request is outside the documented range of an operation
// (e.g. theoretical_filter below order 4).
struct OutOfScopeError : std::domain_error {
    using std::domain_error::domain_error;
};

// A checkpoint or certificate file could not be read or written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace circhad
