#pragma once

#include <stdexcept>
#include <string>

namespace momentcone {

// Bad argument values: unknown labels, malformed input, out-of-range parameters.
struct parameter_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A mathematical precondition does not hold for the given data
// (e.g. a polytope touches a chamber wall, or an empty system where a
// nonempty one is required).
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation outside the supported regime (dimension caps and the like).
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace momentcone
