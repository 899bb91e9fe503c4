#ifndef HOPFPI_ERROR_HPP
#define HOPFPI_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfpi {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Raised when values living in different cyclotomic fields are combined.
class OrderMismatch : public Error {
 public:
  OrderMismatch(unsigned lhs, unsigned rhs)
      : Error("cyclotomic order mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

/// Elements of two different presented algebras were combined.
class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed its configured combinatorial budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + ": " +
              message),
        position_(position),
        message_(message) {}

  std::size_t position() const { return position_; }
  /// The message without the position prefix.
  const std::string& message() const { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

}  // namespace hopfpi

#endif  // HOPFPI_ERROR_HPP
