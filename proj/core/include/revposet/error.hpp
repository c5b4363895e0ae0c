#pragma once

#include <stdexcept>
#include <string>

namespace revposet {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An ElementId that does not address an element of the presentation.
class InvalidElement : public Error {
 public:
  InvalidElement(const std::string& what, std::string selector)
      : Error(what), selector_(std::move(selector)) {}
  const std::string& selector() const noexcept { return selector_; }

 private:
  std::string selector_;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A size guard was exceeded (brute-force enumerations, rank bounds).
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// A DSL syntax error; line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, int line, int column)
      : Error(msg + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// A search ran out of budget before producing the requested structure.
class Exhausted : public Error {
 public:
  Exhausted(const std::string& what, std::string state)
      : Error(what), state_(std::move(state)) {}
  /// The deepest proof state reached, for diagnosis.
  const std::string& state() const noexcept { return state_; }

 private:
  std::string state_;
};

}  // namespace revposet
