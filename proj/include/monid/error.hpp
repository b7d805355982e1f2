#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monid {

/// Base for every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed ideal text or JSON input.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// An operation was called outside its hypotheses (zero ideal, unit ideal,
/// index out of range, ideal not weakly polymatroidal, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A feasibility cap (variables, poset size, search budget) was exceeded.
class CapExceeded : public Error {
public:
  using Error::Error;
};

/// A mathematical invariant that must hold was observed to fail.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

} // namespace monid
