#pragma once

#include <stdexcept>

namespace forge {

// Operands disagree in qubit count or matrix shape.
struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed a configured size cap.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An eigenphase sits too close to the principal-branch cut at -pi.
struct branch_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Step refinement did not reach the requested tolerance.
struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid or inconsistent run configuration.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace forge
