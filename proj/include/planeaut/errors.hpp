#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace planeaut {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position` is a 0-based byte offset into the
/// source text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised when a plane map fails the Jung/van der Kulk reduction, which
/// certifies that it is not a polynomial automorphism.
class NotAnAutomorphism : public Error {
 public:
  using Error::Error;
};

/// A polynomial matrix without constant determinant 1 or with value at t=0
/// different from the identity.
class NotInGL1 : public Error {
 public:
  using Error::Error;
};

class InternalRankError : public Error {
 public:
  using Error::Error;
};

/// Precondition violations of mathematical operations (division by zero,
/// wrong subgroup, unsupported characteristic, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace planeaut
