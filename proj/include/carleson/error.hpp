#pragma once

#include <stdexcept>
#include <string>

namespace carleson {

// Raised when an argument violates an operation's precondition (exit code 2
// from the CLI). The message names the offending field or item.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Raised when a norm or integral that should be finite is not (exit code 3).
class UnboundedNormError : public std::runtime_error {
 public:
  explicit UnboundedNormError(const std::string& what)
      : std::runtime_error(what) {}
};

// Malformed input file or command line (exit code 1).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace carleson
