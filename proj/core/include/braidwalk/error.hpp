#pragma once

#include <stdexcept>
#include <string>

namespace braidwalk {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A group or experiment would exceed the configured enumeration cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the range a family or operation accepts.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// An element that is not a vertex of the Cayley graph at hand.
class UnknownElement : public Error {
 public:
  using Error::Error;
};

/// A real-valued formula evaluated outside its domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace braidwalk
