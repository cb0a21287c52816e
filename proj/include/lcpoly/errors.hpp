#pragma once

#include <stdexcept>
#include <string>

namespace lcpoly {

//! Base for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

//! Bad user-supplied data: dimensions, specs, flags, lookups.
class InvalidInput : public Error {
  public:
    using Error::Error;
};

class InvalidDimension : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class OrderingError : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class DomainError : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class SpecError : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class NormalizationError : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class LookupError : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

//! The director is discontinuous at a prism vertex.
class UndefinedAtVertex : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class InfeasibleError : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

//! A numerical procedure ran out of budget. Carries the best estimate.
class AccuracyError : public Error {
  public:
    AccuracyError(const std::string& what, double best, double estimate)
        : Error(what), best_(best), estimate_(estimate)
    {
    }

    double best() const noexcept { return best_; }
    double error_estimate() const noexcept { return estimate_; }

  private:
    double best_;
    double estimate_;
};

class PathResolutionError : public AccuracyError {
  public:
    using AccuracyError::AccuracyError;
};

//! An objective or integrand produced a non-finite value.
class EvaluationError : public Error {
  public:
    using Error::Error;
};

class UnboundedError : public Error {
  public:
    using Error::Error;
};

}  // namespace lcpoly
