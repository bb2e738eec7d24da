#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pbsim {

// Schema or parameter validation failed. Carries every problem found, not
// just the first one, so callers can report them all at once.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> issues)
      : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

  const std::vector<std::string>& issues() const noexcept { return issues_; }

 private:
  static std::string join(const std::vector<std::string>& issues) {
    std::string msg = "validation failed:";
    for (const auto& s : issues) msg += "\n  - " + s;
    return msg;
  }
  std::vector<std::string> issues_;
};

// The steady-state linear system is singular or nearly so (non-unique kernel,
// e.g. with all dissipation switched off).
class DegenerateSteadyStateError : public std::runtime_error {
 public:
  DegenerateSteadyStateError(const std::string& what, double condition_estimate)
      : std::runtime_error(what + " (condition estimate " +
                           std::to_string(condition_estimate) + ")"),
        cond_(condition_estimate) {}

  double condition_estimate() const noexcept { return cond_; }

 private:
  double cond_;
};

// The weak-drive amplitude system is numerically singular at this parameter
// point (accidental degeneracy).
class ResonanceDegeneracyError : public std::runtime_error {
 public:
  ResonanceDegeneracyError(const std::string& what, double condition_number)
      : std::runtime_error(what + " (condition number " +
                           std::to_string(condition_number) + ")"),
        cond_(condition_number) {}

  double condition_number() const noexcept { return cond_; }

 private:
  double cond_;
};

// The fixed-step integrator could not meet the trajectory tolerance before
// the step size underflowed.
class StiffnessError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Intensity correlations are undefined for states with zero photon number.
class UndefinedCorrelationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A sweep reduction found no successful rows to reduce over.
class EmptyResultError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pbsim
