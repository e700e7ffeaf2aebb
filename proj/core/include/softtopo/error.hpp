#pragma once

#include <stdexcept>
#include <string>

namespace softtopo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands were built over different signatures.
class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed literal, unknown label, degenerate signature, bad file.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An enumeration or generation step would exceed the configured lattice cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace softtopo
