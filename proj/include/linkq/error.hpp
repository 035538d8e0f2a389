#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linkq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed Gauss-code or quandle-table input. `column` is 1-based; 0 when
/// the problem is not tied to a single character (e.g. a label occurring
/// three times).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column = 0)
      : Error(what), column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// A search or enumeration would exceed its configured resource cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// The input is well formed but violates an operation's precondition
/// (asymmetric matrix handed to a classical-only decision, non-tc target
/// quandle, infinite orbit, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace linkq
