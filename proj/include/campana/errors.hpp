#pragma once

#include <stdexcept>
#include <string>

namespace campana {

/// Root of every error raised by the library. Callers that only need to
/// distinguish "bad input" from "bug" can catch this and `InternalError`.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Zero was passed where a nonzero value is required (factorization, units).
class ZeroInputError : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument did not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An arithmetic predicate failed at a specific prime. `witness()` is the
/// decimal form of the smallest offending prime.
class WitnessError : public InvalidArgument {
 public:
  WitnessError(const std::string& what, std::string witness)
      : InvalidArgument(what), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

class NotSIntegerError : public WitnessError {
 public:
  using WitnessError::WitnessError;
};

class NotMFullError : public WitnessError {
 public:
  using WitnessError::WitnessError;
};

/// Text or JSON input could not be parsed. Line and column are 1-based;
/// zero means "not applicable".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + what;
  }
  int line_;
  int column_;
};

/// A computed object failed its own post-condition. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace campana
