#pragma once

#include <stdexcept>
#include <string>

namespace cf {

// Root of the library's exception hierarchy. The command-line driver maps
// ParameterError to exit code 1 and every other Error to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

// A point is off the domain, or a radicand is negative beyond tolerance.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Distance or kernel requested between the two sheets of a hyperboloid.
class CrossSheetError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A function that must be even in t is not.
class SymmetryError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

class IntegrationError : public NumericError {
 public:
  using NumericError::NumericError;
};

class InfeasibleError : public NumericError {
 public:
  InfeasibleError(const std::string& what, double best_residual)
      : NumericError(what), best_residual_(best_residual) {}
  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

}  // namespace cf
