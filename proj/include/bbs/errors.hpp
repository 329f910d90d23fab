#pragma once

#include <stdexcept>
#include <string>

namespace bbs {

/// Raised when an argument breaks a documented precondition
/// (index out of range, invalid tableau, mismatched alphabets).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive enumeration would exceed the configured element cap.
class DomainTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// encode() was handed a (monochrome path, word) pair outside the image of decode().
class InvalidWord : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Oracle construction found two highest weight elements of the same weight.
class AmbiguousOracle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text or JSON input. The message names the offending site/character.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invariant broken inside the library itself (never expected in practice).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bbs
