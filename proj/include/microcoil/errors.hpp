#pragma once

#include <stdexcept>
#include <string>

namespace microcoil {

// Physically meaningless or unsupported request: infeasible geometry, a
// sample point on a conductor, an unsupported model combination.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation point closer than the singularity guard to a filament.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Bad caller input: malformed ranges, sample counts, quantities, files.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace microcoil
