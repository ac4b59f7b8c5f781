#pragma once

#include <stdexcept>
#include <string>

namespace wpp {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A numeric argument violates a precondition (non-positive sigma, factor < 1, ...).
struct InvalidArgument : Error {
  using Error::Error;
};

// Operand shapes are inconsistent (kernel larger than image, row-count mismatch, ...).
struct ShapeMismatch : Error {
  using Error::Error;
};

// Instance exceeds a hard size guard (exact OT solver).
struct CapacityExceeded : Error {
  using Error::Error;
};

// An iteration produced non-finite values. Solvers that keep a loss trace
// throw a subclass carrying the trace collected so far.
struct Divergence : Error {
  using Error::Error;
};

// File-level failure (missing file, bad magic, short read, ...).
struct IoError : Error {
  using Error::Error;
};

}  // namespace wpp
