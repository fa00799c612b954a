#pragma once

#include <stdexcept>
#include <string>

namespace tlsbath {

// Error taxonomy. The CLI maps ConfigError to exit code 2 and every
// NumericalError subclass to exit code 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

class InstabilityError : public NumericalError {
 public:
  InstabilityError(const std::string& what, long step)
      : NumericalError(what), step_(step) {}
  long step() const { return step_; }

 private:
  long step_;
};

class SolverError : public NumericalError {
 public:
  SolverError(const std::string& what, double residual)
      : NumericalError(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class AccuracyError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class InsufficientDataError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class FitDomainError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace tlsbath
