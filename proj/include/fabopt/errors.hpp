#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace fabopt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke a documented precondition (e.g. mismatched lengths).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// Input data violates a domain invariant. `field()` is a path such as
// "cards[2].attack" that locates the offending value.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& message)
      : Error(field.empty() ? message : field + ": " + message),
        field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Malformed text input (JSON, CSV, rationals). Line is 1-based, 0 if unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

// A solver declined an instance because it exceeds a configured size cap.
class RefusalError : public Error {
 public:
  RefusalError(const std::string& message, std::uint64_t cap, std::uint64_t required)
      : Error(message), cap_(cap), required_(required) {}

  std::uint64_t cap() const noexcept { return cap_; }
  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t cap_;
  std::uint64_t required_;
};

}  // namespace fabopt
