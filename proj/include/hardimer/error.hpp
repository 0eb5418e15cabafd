#pragma once

#include <stdexcept>
#include <string>

namespace hardimer {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a brute-force request exceeds the enumeration cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class OutOfSupport : public Error {
 public:
  using Error::Error;
};

class InsufficientSupport : public Error {
 public:
  using Error::Error;
};

/// No lattice point maps strictly inside the requested window.
class EmptyWindow : public Error {
 public:
  using Error::Error;
};

}  // namespace hardimer
