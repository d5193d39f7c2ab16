#pragma once

#include <stdexcept>
#include <string>

namespace normlab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for malformed or out-of-range input; the CLI maps these to exit 1.
class InputError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class RingMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// Zero or unit ideal passed where a nonzero proper ideal is required.
class DegenerateIdeal : public InputError {
 public:
  using InputError::InputError;
};

class NotMPrimary : public InputError {
 public:
  using InputError::InputError;
};

class NotEquigenerated : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class SeriesNotStabilized : public Error {
 public:
  using Error::Error;
};

class NonExactDivision : public Error {
 public:
  using Error::Error;
};

class NonzeroConstantTerm : public Error {
 public:
  using Error::Error;
};

class ReductionDrawFailed : public Error {
 public:
  using Error::Error;
};

class NoReductionWithinBound : public Error {
 public:
  using Error::Error;
};

class InclusionViolated : public Error {
 public:
  using Error::Error;
};

class NonFiniteQuotient : public Error {
 public:
  using Error::Error;
};

class DegenerateSystem : public Error {
 public:
  using Error::Error;
};

/// A property guaranteed by theory failed on a concrete input. Either the
/// implementation is wrong or the theory is; the CLI exits with code 2.
class FalsificationAlert : public Error {
 public:
  using Error::Error;
};

}  // namespace normlab
