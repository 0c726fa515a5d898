#ifndef SNORM_ERROR_HPP
#define SNORM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace snorm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDimension : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NonFinite : public Error {
 public:
  using Error::Error;
};

/// A structure of the wrong kind (or called with the wrong arity).
class KindMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownId : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace snorm

#endif  // SNORM_ERROR_HPP
