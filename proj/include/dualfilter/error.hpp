#pragma once

#include <stdexcept>
#include <string>

namespace dualfilter {

/// Instance breaks a structural invariant (bad indices, cycles, edges on no support).
struct InvalidInstance : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The constraint admits no support at all, or none within the cost bound.
struct InfeasibleConstraint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed instance or report text.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Brute-force enumeration refused: instance above the desk-scale limit.
struct SizeGuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dualfilter
