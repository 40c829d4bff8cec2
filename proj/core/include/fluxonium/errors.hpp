#ifndef FLUXONIUM_ERRORS_HPP
#define FLUXONIUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fluxonium {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad user input (non-positive energy, dimension too small, ...).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// The basis-doubling ladder hit its dimension cap before the eigenvalues
// stabilised. Carries the last observed relative delta.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& msg, double last_delta, int last_dimension)
      : Error(msg), last_delta(last_delta), last_dimension(last_dimension) {}
  double last_delta;
  int last_dimension;
};

// An input violated a structural contract (e.g. a non-symmetric matrix was
// handed to the symmetric eigensolver).
class ContractViolation : public Error {
 public:
  explicit ContractViolation(const std::string& msg) : Error(msg) {}
};

// Requested feature exists in the interface but has no implementation
// (e.g. sub-ohmic baths, whose zero-frequency limit is not finite).
class NotImplementedError : public Error {
 public:
  explicit NotImplementedError(const std::string& msg) : Error(msg) {}
};

// A regression/fit was asked for with too few usable points.
class InsufficientDataError : public Error {
 public:
  explicit InsufficientDataError(const std::string& msg) : Error(msg) {}
};

}  // namespace fluxonium

#endif
