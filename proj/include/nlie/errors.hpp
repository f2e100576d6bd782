#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nlie {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Wrong number of bracket arguments, or an arity the construction cannot accept.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// Mismatched dimensions between vectors, matrices, algebras or modules.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Malformed index pattern (obstruction indices, basis tuples, sizes).
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A construction violated one of its own exact identities.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Text or JSON input could not be read. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace nlie
