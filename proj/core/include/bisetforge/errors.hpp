#pragma once

#include <stdexcept>
#include <string>

namespace bisetforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside an operation's domain (non-subgroup, wrong ring, bad shape).
class DomainError : public Error {
 public:
  using Error::Error;
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A computed object disagrees with a claim or a second computation.
class VerificationError : public Error {
 public:
  using Error::Error;
};

class NonTerminationError : public Error {
 public:
  using Error::Error;
};

class FixtureError : public Error {
 public:
  using Error::Error;
};

// Should be unreachable; signals a broken internal invariant.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace bisetforge
