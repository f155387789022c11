#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bitblas {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument: dimension mismatch, out-of-range vertex, unsupported option.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A matrix with zero vertices was passed where a non-empty one is required.
class EmptyMatrixError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// A data structure violates its structural invariants.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Algorithm input is well formed but inconsistent with the algorithm's
/// preconditions (asymmetric pattern, leftover self-loops, bad degree vector).
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace bitblas
