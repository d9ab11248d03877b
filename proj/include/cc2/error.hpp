#pragma once

#include <stdexcept>
#include <string>

namespace cc2 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed a value outside the operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A group id / order combination that the catalog does not contain.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// Operation does not apply to the given family.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// Coset limit or search budget exhausted.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A realized object contradicts what its construction promised, e.g. a
/// presentation that collapses to a smaller group.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed or mismatched cache file.
class CacheError : public Error {
 public:
  using Error::Error;
};

}  // namespace cc2
