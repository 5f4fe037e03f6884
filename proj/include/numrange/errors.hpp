#pragma once

#include <stdexcept>

namespace numrange {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands have incompatible or non-square dimensions.
struct DimensionError : Error {
  using Error::Error;
};

// A vector that must be unit-norm is not.
struct NormalizationError : Error {
  using Error::Error;
};

// A matrix that must be Hermitian is not, within tolerance.
struct NotHermitianError : Error {
  using Error::Error;
};

// The eigensolver failed to converge.
struct ConvergenceError : Error {
  using Error::Error;
};

// The operator is a scalar multiple of a Hermitian matrix, so the
// requested parallelogram construction collapses.
struct DegenerateOperatorError : Error {
  using Error::Error;
};

// Half-plane clipping eliminated the whole region.
struct EmptyIntersectionError : Error {
  using Error::Error;
};

// The zero operator was given where ratios must be formed.
struct ZeroOperatorError : Error {
  using Error::Error;
};

// Malformed input file or token.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace numrange
