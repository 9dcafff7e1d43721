#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotoid {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed Gauss code or `.gko` text. `line` is 1-based (0 when the input
/// was a single code), `token` is the 1-based index of the offending token
/// (0 when the error is not tied to one token).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0, std::size_t token = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t token() const noexcept { return token_; }
  /// The message without the line/token prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t token_;
};

/// An event list that violates the Gauss diagram invariants.
class InvalidDiagram : public Error {
 public:
  using Error::Error;
};

class UnknownChord : public Error {
 public:
  explicit UnknownChord(std::size_t id);
};

/// A singular chord reached an operation that needs a signed crossing, or a
/// signed chord reached one that needs a singular crossing.
class SingularChordError : public Error {
 public:
  using Error::Error;
};

/// Invariants built under different reduction policies were combined.
class PolicyMismatch : public Error {
 public:
  PolicyMismatch();
};

/// A move was requested whose local pattern is absent from the diagram.
class MoveError : public Error {
 public:
  using Error::Error;
};

/// An invariant difference that is not a sum of crossing-change terms.
/// Receiving it for H(K) - H(K') certifies that K and K' are not homotopic.
class NotHomotopyForm : public Error {
 public:
  using Error::Error;
};

}  // namespace knotoid
