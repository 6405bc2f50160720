#pragma once

#include <stdexcept>
#include <string>

namespace constacyclic {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The modulus is not an odd prime in [3, 2^31).
class InvalidPrimeError : public Error {
 public:
  using Error::Error;
};

/// Two operands live over different prime fields.
class ModulusMismatchError : public Error {
 public:
  using Error::Error;
};

/// Operand lengths disagree (vectors, permutations).
class LengthMismatchError : public Error {
 public:
  using Error::Error;
};

/// An argument violates an operation's precondition (non-monic input,
/// zero divisor polynomial, even length where odd is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A set enumeration would exceed the configured cap.
class EnumerationLimitError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace constacyclic
