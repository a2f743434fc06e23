#pragma once

#include <stdexcept>
#include <string>

namespace frobcalc {

// Exception classes map one-to-one onto the CLI exit codes:
// DomainError -> 1, PrecisionError/CapError -> 2, ParseError -> 3.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside an operation's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operands live in different polynomial rings.
class RingMismatch : public DomainError {
 public:
  explicit RingMismatch(const std::string& what)
      : DomainError("ring mismatch: " + what) {}
};

/// Not enough t-adic precision to decide a question.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// An iteration or enumeration bound was exceeded.
class CapError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A certificate the theory guarantees could not be produced.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace frobcalc
