#pragma once

#include <stdexcept>
#include <string>

namespace ldsk {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (graph, solution, modulator, hypergraph files).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An argument violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The input is larger than an exhaustive routine is configured to accept.
class RefusalError : public Error {
 public:
  using Error::Error;
};

/// A reduction rule was asked to fire where its guard does not hold.
class InapplicableError : public Error {
 public:
  using Error::Error;
};

/// A constructed certificate failed its own verification. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ldsk
