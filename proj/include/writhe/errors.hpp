#pragma once

#include <stdexcept>
#include <string>

namespace writhe {

// Input that does not describe a valid object (non-bijection, bad token, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation requires odd (or even) size and got the other parity.
class SizeParityError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Parameter outside the operation's documented domain.
class DomainError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Brute-force routine asked to work on an instance that is too large.
class ComplexityLimit : public DomainError {
 public:
  using DomainError::DomainError;
};

// An internal identity that must hold exactly was violated.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace writhe
