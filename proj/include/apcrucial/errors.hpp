#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apcrucial {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: duplicate entries, out-of-range insertion values,
// mismatched lengths.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Text notation could not be parsed. `position` is the 0-based character
// offset where the problem was detected.
class ParseError : public InvalidInput {
 public:
  enum class Kind { malformed_token, zero_value, duplicate_value, non_contiguous };

  ParseError(Kind kind, std::size_t position, const std::string& what)
      : InvalidInput(what + " (at offset " + std::to_string(position) + ")"),
        kind_(kind),
        position_(position) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

// Parameters outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A precondition on a permutation (e.g. "must be anti-monotone") failed.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Parameter combination no implemented family covers.
class Unsupported : public Error {
 public:
  using Error::Error;
};

// A bounded search ran out of budget or space without a witness.
class NotFound : public Error {
 public:
  using Error::Error;
};

}  // namespace apcrucial
