#pragma once

#include <stdexcept>
#include <string>

namespace monotypic {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// input is not the normal set of any polytope (does not positively span)
struct NotPolytopal : Error {
  using Error::Error;
};

struct DimMismatch : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  using Error::Error;
};

struct Unbounded : Error {
  using Error::Error;
};

struct EmptyPolytope : Error {
  using Error::Error;
};

struct EmptySlice : Error {
  using Error::Error;
};

struct NotPrimitive : Error {
  using Error::Error;
};

struct NormalSetMismatch : Error {
  using Error::Error;
};

struct ZeroDimensional : Error {
  using Error::Error;
};

struct NotApplicable : Error {
  using Error::Error;
};

struct ConstructionFailed : Error {
  using Error::Error;
};

// internal invariant broken; always a bug, never a bad input
struct InternalError : Error {
  using Error::Error;
};

struct UniquenessViolation : InternalError {
  using InternalError::InternalError;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace monotypic
