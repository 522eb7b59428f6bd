#pragma once

#include <stdexcept>
#include <string>

namespace specsum {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition on an operation's input was violated.
struct InvalidInput : Error {
  using Error::Error;
};

/// Root clusters could not be resolved at the requested tolerance.
struct IllConditioned : Error {
  using Error::Error;
};

/// The characteristic polynomial has fewer real roots (with multiplicity)
/// than the ambient eigenvalue count.
struct NonRealRoots : Error {
  using Error::Error;
};

/// A query value lies outside the feasible interval.
struct OutOfRange : Error {
  using Error::Error;
};

/// A boundary spectrum violates the admissible multiplicity layout
/// (a multiplicity above 2, or a doubled value at a parity-forbidden slot).
struct PatternViolation : Error {
  using Error::Error;
};

/// Two eigenvalues coincide below the minimum-gap floor; the requested
/// rational expression is undefined there.
struct RepeatedEigenvalue : Error {
  using Error::Error;
};

/// The Vandermonde system is numerically singular.
struct SingularSystem : Error {
  using Error::Error;
};

/// The queried index belongs to a doubled pair of the boundary spectrum,
/// where the limit does not exist.
struct IndexInDoubledPair : Error {
  using Error::Error;
};

/// An angle falls on (or within tolerance of) a cotangent pole.
struct PoleAngle : Error {
  using Error::Error;
};

/// A bracketing search was given an interval with no sign change.
struct NoSignChange : Error {
  using Error::Error;
};

}  // namespace specsum
