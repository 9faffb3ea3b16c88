#pragma once

#include <stdexcept>
#include <string>

namespace hosc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class UnsupportedDegree : public Error {
 public:
  using Error::Error;
};

/// A group translation moved samples further than the grid can represent.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input and output grids of a scaled Fourier transform do not match.
class ResamplingError : public Error {
 public:
  using Error::Error;
};

/// Closed-form kernel requested at a time too close to zero.
class NearDeltaError : public Error {
 public:
  using Error::Error;
};

class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, double bound)
      : Error(what), bound_(bound) {}
  double bound() const noexcept { return bound_; }

 private:
  double bound_;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hosc
