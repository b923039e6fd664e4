#pragma once

#include <stdexcept>

namespace ostd {

// Array lengths or matrix dimensions do not line up.
struct ShapeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input claimed to be symmetric deviates from its symmetric part by more
// than the tolerance. Use symmetrize() for intentionally asymmetric data.
struct SymmetryViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Eigensolver exhausted its iteration budget. Signals a bug or a
// pathological matrix, not an expected outcome.
struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation undefined on the all-zero tensor (e.g. relative error).
struct ZeroTensor : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Instance specification violates a constraint (rank > dim, bad family
// parameters, negative noise level, ...).
struct InvalidSpec : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// File could not be opened or parsed.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ostd
