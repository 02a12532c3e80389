#pragma once

#include <stdexcept>
#include <string>

namespace comkit {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sign vectors of different lengths were combined.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Malformed text input, unknown element label, cyclic poset.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed the configured limits.
class GuardError : public Error {
 public:
  using Error::Error;
};

// An operation was called on an input outside its domain (e.g. a non-COM).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A sign vector that must belong to the system does not.
class MembershipError : public Error {
 public:
  using Error::Error;
};

// The result would be an empty system or an empty ground set.
class EmptyResultError : public Error {
 public:
  using Error::Error;
};

// Two independent computations that must agree did not.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace comkit
