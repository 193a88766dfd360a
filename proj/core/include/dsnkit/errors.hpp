#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dsnkit {

// Base of every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: unknown vertices, arcs missing from the host, bad requests.
class InputError : public Error {
 public:
  using Error::Error;
};

// Text-format error with a 1-based position.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A documented desk-scale cap was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// The input is well formed but outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A documented precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A graph that should be inclusion-minimal turned out not to be.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

// A constructed object failed its own post-check. Always a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace dsnkit
