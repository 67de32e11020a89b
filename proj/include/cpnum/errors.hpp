#pragma once

#include <stdexcept>
#include <string>

namespace cpnum {

// The caller violated an operation's precondition.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text; the message names the offending line or field.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A property the construction guarantees failed to hold at runtime.
// Always a bug, either in this library or in a hand-edited certificate.
class InvariantViolation : public std::runtime_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration grew past its configured limit.
class LimitError : public std::runtime_error {
 public:
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cpnum
