#pragma once

#include <stdexcept>
#include <string>

namespace tempex {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input document: bad JSON, missing or mistyped fields.
struct ParseError : Error {
  using Error::Error;
};

/// Structurally broken instance or journey.
struct ValidationError : Error {
  using Error::Error;
};

/// Argument outside its documented range (window bounds, time steps, ids).
struct RangeError : Error {
  using Error::Error;
};

/// A documented operation precondition does not hold for the given input.
struct PreconditionError : Error {
  using Error::Error;
};

/// The underlying graph does not have the shape the operation requires.
struct ShapeError : Error {
  using Error::Error;
};

/// State space exceeds the configured memory budget.
struct CapacityError : Error {
  using Error::Error;
};

/// A generator exhausted its resampling budget.
struct GenerationError : Error {
  using Error::Error;
};

/// A guarantee the algorithm is entitled to rely on failed to materialize.
/// Seeing this exception means a bug in this library, or an invalid graph
/// that slipped past validation.
struct InternalGuaranteeError : Error {
  using Error::Error;
};

}  // namespace tempex
