#pragma once

#include <stdexcept>
#include <string>

namespace hkprod {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("ring mismatch") {}
  explicit RingMismatch(const std::string& what) : Error("ring mismatch: " + what) {}
};

/// Raised when an operation needs a finite colength (m-primary) input.
class InfiniteColength : public Error {
 public:
  explicit InfiniteColength(const std::string& what) : Error("infinite colength: " + what) {}
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// A check ran to completion but could not reach a verdict (e.g. no q0 in range).
class Inconclusive : public Error {
 public:
  using Error::Error;
};

}  // namespace hkprod
