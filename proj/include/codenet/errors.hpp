#pragma once

#include <stdexcept>
#include <string>

namespace codenet {

/// Malformed or out-of-contract input (bad file, bad parameter). CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parse failure tied to a line of an input file.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The request is well formed but no solution exists (no covering, not efficient, ...).
/// CLI exit code 3.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive enumeration would exceed the desk-scale guard.
class CodeTooLarge : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace codenet
