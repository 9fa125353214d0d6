#pragma once

#include <stdexcept>
#include <string>

namespace brc {

// Base of every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Coefficient arithmetic left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// A precondition on an argument was violated (bad index, empty set, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An element has support outside the window it is supposed to live in.
class SupportError : public Error {
 public:
  using Error::Error;
};

// Malformed text input (key file, ciphertext file, element rendering).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Inconsistent data handed to a solver or recurrence.
class InconsistentError : public Error {
 public:
  using Error::Error;
};

}  // namespace brc
