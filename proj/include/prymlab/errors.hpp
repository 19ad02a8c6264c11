#pragma once

#include <stdexcept>
#include <string>

namespace prymlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input data is structurally inconsistent (bad permutation, bad schema, ...).
class InvalidDataError : public Error {
 public:
  using Error::Error;
};

/// An S3-action that cannot come from a nodal curve (e.g. full stabilizer
/// at a node without branch exchange).
class MalformedActionError : public InvalidDataError {
 public:
  using InvalidDataError::InvalidDataError;
};

/// A symbolic verification did not hold.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace prymlab
