#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sesstype {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed concrete syntax; `position()` is a byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& detail);

  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

/// A global type mentions more than two roles, or a role talks to itself.
class RoleError : public Error {
 public:
  using Error::Error;
};

/// An operation was applied outside the domain it is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// continuation() was asked for a label the process cannot weakly perform.
class NoTransition : public Error {
 public:
  using Error::Error;
};

/// State exploration visited more system states than the configured cap.
/// Reduction always terminates, so this indicates a bug or a bad cap.
class ExplorationLimit : public Error {
 public:
  using Error::Error;
};

/// Enumeration parameters exceed the configured caps.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// No type checking rule applies to the process (e.g. `!a + b`).
class Untypeable : public Error {
 public:
  using Error::Error;
};

class ProjectionError : public Error {
 public:
  using Error::Error;
};

}  // namespace sesstype
