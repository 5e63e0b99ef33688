#pragma once

#include <stdexcept>
#include <string>

namespace fixpoint {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numeric input outside the formula's domain (negative, NaN, infinite).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A point's variant is incompatible with the metric or expression applied to it.
class DomainMismatchError : public Error {
 public:
  using Error::Error;
};

/// Structural validation failed (duplicate points, clause overlap, non-total map, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Position-annotated error from the instance-file parser.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error("line " + std::to_string(line) + ":" + std::to_string(column) +
              ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// No point maps close enough to the requested value under g.
class NoPreimageError : public Error {
 public:
  using Error::Error;
};

/// f and g fail to commute at the coincidence point.
class NotWeaklyCompatibleError : public Error {
 public:
  using Error::Error;
};

/// The point of coincidence is not fixed by f or g.
class NotFixedError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRangeError : public Error {
 public:
  using Error::Error;
};

/// Orbit too short or with zero initial step; bound analysis undefined.
class DegenerateOrbitError : public Error {
 public:
  using Error::Error;
};

class UnknownExampleError : public Error {
 public:
  using Error::Error;
};

}  // namespace fixpoint
