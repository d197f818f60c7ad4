#pragma once

#include <stdexcept>
#include <string>

namespace stftsr {

/// Invalid argument to a library operation (bad sigma, bad shape, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation received a measure living on the wrong domain.
class DomainMismatchError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// Requested frequency channel lies outside the measured band.
class OutOfBandError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// Measurement matrix is internally inconsistent (anti-diagonal check failed).
class CorruptedMeasurementError : public std::runtime_error {
 public:
  explicit CorruptedMeasurementError(const std::string& what, double inconsistency)
      : std::runtime_error(what), inconsistency_(inconsistency) {}
  double inconsistency() const noexcept { return inconsistency_; }

 private:
  double inconsistency_ = 0.0;
};

/// Interpolation system is numerically singular.
class IllConditionedSystemError : public std::runtime_error {
 public:
  explicit IllConditionedSystemError(const std::string& what, double condition_number)
      : std::runtime_error(what), condition_number_(condition_number) {}
  double condition_number() const noexcept { return condition_number_; }

 private:
  double condition_number_ = 0.0;
};

/// Iterative solver did not reach its tolerance within the iteration budget.
class SolverFailureError : public std::runtime_error {
 public:
  SolverFailureError(const std::string& what, int iterations, double residual)
      : std::runtime_error(what), iterations_(iterations), residual_(residual) {}
  int iterations() const noexcept { return iterations_; }
  double residual() const noexcept { return residual_; }

 private:
  int iterations_ = 0;
  double residual_ = 0.0;
};

/// Least-squares support matrix is rank deficient (coalesced atoms).
class DegenerateSupportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read, parsed, or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stftsr
