#pragma once

#include <stdexcept>
#include <string>

namespace seqfree {

/// Input partition does not satisfy the sequence/multiplicity constraint an operation requires.
class constraint_violation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested size is above a configured enumeration or evaluation budget.
class budget_exceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Iterative numerics did not reach the requested tolerance.
class convergence_failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace seqfree
