#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace adjlab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position()` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation got the zero polynomial where a nonzero one is required
/// (e.g. the order of vanishing of 0 is infinite).
class ZeroPolynomialError : public Error {
 public:
  using Error::Error;
};

/// Variable lists, arities or dimensions do not line up.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Exact division requested where the divisor does not divide.
class DivisionError : public Error {
 public:
  using Error::Error;
};

/// Blow-up or resolution failure. `witness()` carries a polynomial (in the
/// text grammar) describing the offending locus when one is available.
class ResolutionError : public Error {
 public:
  ResolutionError(const std::string& message, std::string witness = {})
      : Error(witness.empty() ? message : message + " (witness: " + witness + ")"),
        witness_(std::move(witness)) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// A zero set expected to be finite (singular points of a plane curve,
/// common zeros of a system) is not.
class InfiniteZeroSetError : public ResolutionError {
 public:
  using ResolutionError::ResolutionError;
};

/// A computation needs a normal-crossings resolution and the tree does not
/// carry one.
class SncError : public Error {
 public:
  using Error::Error;
};

/// Numerical stage could not run (no regular sample points, bad region).
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace adjlab
