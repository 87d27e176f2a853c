#pragma once

#include <stdexcept>
#include <string>

namespace isoperim {

// Absolute tolerance for geometric predicates (coincidence, collinearity,
// unit-length checks). Adequate at desk scale; the single definition used
// everywhere.
inline constexpr double kGeomEps = 1e-12;

// Input violates an operation's precondition (bad polygon, out-of-range
// target, malformed region, ...). Maps to CLI exit code 2.
struct RejectedInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Region is empty or lower-dimensional.
struct InfeasibleRegion : RejectedInput {
  using RejectedInput::RejectedInput;
};

// Operation not defined for this input kind (e.g. support values of the
// non-convex built-in region).
struct UnsupportedOperation : RejectedInput {
  using RejectedInput::RejectedInput;
};

// An iteration failed to converge. Maps to CLI exit code 3.
struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace isoperim
