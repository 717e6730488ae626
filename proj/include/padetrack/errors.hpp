#pragma once

#include <stdexcept>
#include <string>

namespace padetrack {

// Thrown for malformed arguments: shape mismatches, non-finite inputs,
// truncation orders that do not line up.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// LU pivot fell below the singularity threshold.
class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Toric system evaluated at a point with a zero coordinate.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Series Newton was started at a point that is not on the homotopy.
class InvalidStart : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Jacobian at the series expansion point is singular.
class SingularJacobian : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rational approximant evaluated at (or numerically on) a pole.
class PoleEvaluation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Predictor step size dropped below the configured minimum.
class StepUnderflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input document could not be parsed or failed validation.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace padetrack
