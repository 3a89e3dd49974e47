#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace fdroof {

// Base of every error the toolkit throws. The CLI maps UsageError-derived
// failures to exit code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: invariant violations, unknown keys, out-of-range arguments.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class UnknownNameError : public ValidationError {
 public:
  UnknownNameError(const std::string& kind, const std::string& name);

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class ConflictError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class RangeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Malformed registry / catalog / scenario text.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& source, std::optional<int> line, const std::string& what);

  std::optional<int> line() const noexcept { return line_; }

 private:
  std::optional<int> line_;
};

// A machine was asked for its ridge point but carries no achievable rates.
class UnknownRatesError : public Error {
 public:
  explicit UnknownRatesError(const std::string& machine);
};

}  // namespace fdroof
