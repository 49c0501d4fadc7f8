#pragma once

#include <stdexcept>
#include <string>

namespace qsol {

/// Evaluation point outside the function's time interval.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two grid functions with different node sets were combined.
struct GridMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsortedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MissingField : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A user-supplied evaluator threw or returned garbage; carries the sample point.
struct EvaluatorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Initial value outside [alpha(t0), beta(t0)] beyond tolerance.
struct BracketViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Right-hand side returned NaN or infinity at a sampled point.
struct NonFiniteRHS : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownExample : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A corpus parameter table violates a structural requirement of its family.
struct ParamValidation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Lower/upper solution precheck failed and the caller did not force the run.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qsol
