#pragma once

#include <stdexcept>
#include <string>

namespace magnet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Objects living in different ambient groups, malformed coordinates, etc.
class StructuralError : public Error {
public:
  using Error::Error;
};

/// An operation was called outside its domain (e.g. a non-face passed as a face).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A solver or enumeration hit its configured cap. Never a wrong answer.
class ResourceLimit : public Error {
public:
  using Error::Error;
};

/// No positive grading exists for the given monoid.
class NoCertificate : public Error {
public:
  using Error::Error;
};

/// A structural identity that must hold failed; always indicates a bug.
class IdentityFailure : public Error {
public:
  using Error::Error;
};

class Unsupported : public Error {
public:
  using Error::Error;
};

} // namespace magnet
