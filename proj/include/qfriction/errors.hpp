#pragma once

#include <stdexcept>
#include <string>

namespace qfriction {

// Argument outside the mathematical domain of an operation (e.g. b <= 0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input that makes the normalized description diverge (v == 0).
class DegenerateInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Stationary state requested while both transition rates vanish.
class UndefinedEquilibriumError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Adaptive quadrature failed to reach the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double previous, double last)
      : std::runtime_error(what), previous_estimate(previous), last_estimate(last) {}

  double previous_estimate;
  double last_estimate;
};

// Mode-sum grid does not contain the resonance line.
class CutoffError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Mode-sum grid is too coarse for the requested broadening.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ODE integrator gave up (step size underflow or step budget exhausted).
class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Golden-section search found no interior maximum.
class OptimizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input (sweep specs, unit strings, config files).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qfriction
