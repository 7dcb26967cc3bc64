#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eoc {

// Base for every recoverable failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class EmptyStreamError : public Error {
 public:
  using Error::Error;
};

// Parameter mismatch or invalid configuration (Δ/γ, partition plans, bounds).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A link outside the batch it was handed to.
class RangeError : public Error {
 public:
  RangeError(long long t, const std::string& what)
      : Error(what + " (timestamp " + std::to_string(t) + ")"), timestamp_(t) {}
  long long timestamp() const { return timestamp_; }

 private:
  long long timestamp_;
};

class StateError : public Error {
 public:
  using Error::Error;
};

class OracleBoundsError : public Error {
 public:
  using Error::Error;
};

// Programming errors: a caller broke a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace eoc
