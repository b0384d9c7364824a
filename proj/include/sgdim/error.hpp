#pragma once

#include <stdexcept>
#include <string>

namespace sgdim {

/// Input violates an operation's precondition (length mismatch, bad parameter).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested size exceeds an enumeration or memory guard.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed text in one of the file formats.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace sgdim
