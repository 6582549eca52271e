#ifndef APOLAR_ERRORS_HPP
#define APOLAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace apolar {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operands live in different ambient rings (variable count or base field).
class MismatchError : public Error {
 public:
  explicit MismatchError(const std::string& msg) : Error(msg) {}
};

/// Zero polynomial (or zero operator) where a nonzero one is required.
class ZeroInputError : public Error {
 public:
  explicit ZeroInputError(const std::string& msg) : Error(msg) {}
};

/// The base field characteristic is too small for the requested operation.
class UnsupportedCharacteristicError : public Error {
 public:
  explicit UnsupportedCharacteristicError(const std::string& msg) : Error(msg) {}
};

/// A truncated computation cannot certify its result at the current bound.
class PrecisionError : public Error {
 public:
  explicit PrecisionError(const std::string& msg) : Error(msg) {}
};

/// The images of a would-be automorphism have dependent linear parts.
class InvalidAutomorphismError : public Error {
 public:
  explicit InvalidAutomorphismError(const std::string& msg) : Error(msg) {}
};

/// A stated hypothesis of an operation fails (named in the message).
class HypothesisError : public Error {
 public:
  explicit HypothesisError(const std::string& msg) : Error(msg) {}
};

/// Syntax error in the expression language.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

}  // namespace apolar

#endif
