#pragma once

#include <stdexcept>
#include <string>

namespace dlt {

// Bad arguments, violated preconditions, malformed configs. Maps to CLI exit code 2.
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Evaluation request landed on the branch cut (-inf, 0] where the principal
// value is ambiguous; callers must pick a side via e1_boundary / boundary_value.
class BranchError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An iteration failed to reach its target accuracy. Carries the best residual
// or error estimate achieved so diagnostics can report how close it got.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best)
      : std::runtime_error(what), best_(best) {}
  double best_achieved() const { return best_; }

 private:
  double best_;
};

}  // namespace dlt
