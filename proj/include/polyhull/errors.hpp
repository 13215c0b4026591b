#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyhull {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands, points or objectives disagree on the number of dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A variable name that is not part of the relevant variable order.
class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(const std::string& name)
      : Error("unknown variable '" + name + "'"), name_(name) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// A variable order that lists the same name twice.
class DuplicateVariable : public Error {
 public:
  explicit DuplicateVariable(const std::string& name)
      : Error("duplicate variable '" + name + "'"), name_(name) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class UnsatisfiableInput : public Error {
 public:
  using Error::Error;
};

/// An operation that needs a nonempty polyhedron received Empty.
class EmptyOperand : public Error {
 public:
  using Error::Error;
};

class EmptyList : public Error {
 public:
  using Error::Error;
};

class UnboundedOperand : public Error {
 public:
  using Error::Error;
};

class GenerationFailure : public Error {
 public:
  using Error::Error;
};

/// Malformed polyhedron text. Line and column are 1-based; 0 means unknown.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// `<` or `>` in constraint text; only closed polyhedra are representable.
class StrictInequalityError : public SyntaxError {
 public:
  StrictInequalityError(std::size_t line, std::size_t column)
      : SyntaxError("strict inequalities are not supported", line, column) {}
};

}  // namespace polyhull
