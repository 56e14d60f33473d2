#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adomian {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input to an operation: invalid spec, extent mismatch, unknown name.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected)
      : Error("parse error at position " + std::to_string(position) + ": expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

class MissingAssignment : public Error {
 public:
  explicit MissingAssignment(const std::string& variable)
      : Error("no value assigned to " + variable), variable_(variable) {}
  const std::string& variable() const { return variable_; }

 private:
  std::string variable_;
};

class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class Timeout : public Error {
 public:
  Timeout() : Error("deadline exceeded") {}
};

}  // namespace adomian
