#pragma once

#include <stdexcept>
#include <string>

namespace chiraltp {

// Failure of an eigensolver, linear solver, or convergence schedule.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

class ConvergenceError : public NumericalError {
 public:
  explicit ConvergenceError(const std::string& what) : NumericalError(what) {}
};

// A transition dipole fell below the vanishing tolerance; the forbidden
// angle is undefined for the requested triple.
class VanishingDipoleError : public NumericalError {
 public:
  explicit VanishingDipoleError(const std::string& what)
      : NumericalError(what) {}
};

// Malformed or inconsistent run configuration.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chiraltp
