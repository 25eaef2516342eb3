#pragma once

#include <stdexcept>
#include <string>

namespace contavg {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition of an operation was not met (shape mismatch, bad argument).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// A point left the box on which a computation is valid.
class OutOfDomainError : public Error {
 public:
  using Error::Error;
};

// A closed-form complex-time flow hit its singularity.
class SingularFlowError : public Error {
 public:
  using Error::Error;
};

// Adaptive integration could not make progress.
class StepUnderflowError : public Error {
 public:
  using Error::Error;
};

// An iterative solver (Newton, root bracketing, quadrature) did not converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// An experiment configuration is malformed; key() names the offending entry.
class ConfigError : public Error {
 public:
  ConfigError(std::string key, const std::string& what)
      : Error(key + ": " + what), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

}  // namespace contavg
