#pragma once

#include <stdexcept>
#include <string>

namespace defeasor {

/// Base class for every error raised by the engines.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed query or framework contents (unknown argument, bad relation).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in one of the text formats. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Argument construction exceeded the height cap.
class CyclicRuleBaseError : public Error {
 public:
  using Error::Error;
};

/// The declared priorities contain a cycle.
class PriorityCycleError : public Error {
 public:
  using Error::Error;
};

}  // namespace defeasor
