#pragma once

#include <stdexcept>
#include <string>

namespace logsig {

// Mismatched alphabet size / truncation, or malformed inputs.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Mathematical precondition violated (nonzero scalar for exp, singular sums, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Requested truncation exceeds the dense-storage cap.
struct CapacityError : std::length_error {
  using std::length_error::length_error;
};

}  // namespace logsig
