#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weakkam {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid grid, kernel or problem configuration; the message names the
// violated bound.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

// A numerical precondition failed at runtime (negative cycle after reduction,
// momentum window too small, non-monotone iterate, ...).
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Fixed-point iteration hit its iteration cap.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double last_residual,
                   std::size_t iterations)
      : Error(what), last_residual_(last_residual), iterations_(iterations) {}

  double last_residual() const noexcept { return last_residual_; }
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  double last_residual_;
  std::size_t iterations_;
};

}  // namespace weakkam
