#pragma once

#include <stdexcept>
#include <string>

namespace vtc {

// Base for every failure the library reports. The C API maps each subclass
// onto one status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller passed parameters or words outside the operation's contract.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The received word is not within the code's correction radius.
class CorruptInput : public Error {
 public:
  using Error::Error;
};

// Enumeration or search would exceed the configured size cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// A result that a proven property says cannot happen. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace vtc
