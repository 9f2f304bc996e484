// Error hierarchy shared by all dqlab modules.
//
// ValidationError covers rejected inputs (bad parameters, violated
// preconditions); NumericError covers failures that arise while computing
// (step-size collapse, unconverged grids). The CLI maps the two categories
// to exit codes 1 and 2.
#pragma once

#include <stdexcept>
#include <string>

namespace dqlab {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
  public:
    using Error::Error;
};

class NumericError : public Error {
  public:
    using Error::Error;
};

// --- parameter / precondition violations ------------------------------------

class NonPositiveParameter : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class UnderdampedViolation : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class ZeroCharge : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class ZeroDamping : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class NegativeIndex : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class IncompatibleGrids : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class UnnormalizedInput : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class InsufficientSamples : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class DimensionTooSmall : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class OpenPath : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class TruncationTailTooLarge : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class NonPositiveDeformation : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

// --- numeric failures --------------------------------------------------------

class StepUnderflow : public NumericError {
  public:
    using NumericError::NumericError;
};

class NonPositiveCasimir : public NumericError {
  public:
    using NumericError::NumericError;
};

class GridTooCoarse : public NumericError {
  public:
    using NumericError::NumericError;
};

class NonConvergentTail : public NumericError {
  public:
    using NumericError::NumericError;
};

// --- CLI-facing --------------------------------------------------------------

class ConfigError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

} // namespace dqlab
