#pragma once

#include <stdexcept>
#include <string>

namespace naf {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or unsupported input (non-square matrix, zero constant term, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A certified comparison could not be decided at the current precision.
/// Callers holding a refinable instance retry at higher precision.
class Undecided : public Error {
 public:
  using Error::Error;
};

/// Refinement would exceed the configured precision cap.
class PrecisionCapExceeded : public Error {
 public:
  using Error::Error;
};

/// An enumeration or search grew past its configured size limit.
class SizeCapExceeded : public Error {
 public:
  using Error::Error;
};

/// A digit set violates the residue-system contract.
class MalformedDigitSet : public Error {
 public:
  using Error::Error;
};

/// Operation requires an expanding endomorphism.
class NotExpanding : public Error {
 public:
  using Error::Error;
};

}  // namespace naf
