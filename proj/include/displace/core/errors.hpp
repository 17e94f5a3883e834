#pragma once

#include <stdexcept>
#include <string>

namespace displace {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two elements (or an element and a subgroup) live in different groups.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation received an element of the wrong concrete realization.
class RealizationMismatch : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arguments of an operation does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An enumeration or search would exceed its configured element budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// A membership question was asked without an oracle that can answer it.
class OracleUnavailable : public Error {
 public:
  using Error::Error;
};

/// Scenario or word syntax that cannot be parsed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace displace
