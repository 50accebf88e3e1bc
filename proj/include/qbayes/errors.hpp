#pragma once

#include <stdexcept>
#include <string>

namespace qbayes {

// Error taxonomy shared by the library and the CLI. The CLI maps these to
// exit codes: ConfigError -> 1, ContractError -> 2, ZeroEvidenceError -> 3.

// Invalid user-supplied configuration or precondition (bad table, bad
// schedule, out-of-range parameter). Messages name the offending field.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal numerical contract violated (mismatched closed forms, failed
// phase solve, width mismatch). Indicates a bug or an inconsistent input
// that passed static validation.
struct ContractError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evidence P(d) = 0: Bayesian updating is undefined for this (prior, data).
struct ZeroEvidenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A requested conditional rotation would need amplitude > 1 at some
// supported hypothesis (c^2 P(d|h) / B^2 > 1).
struct InvalidRotationError : ContractError {
  using ContractError::ContractError;
};

// The favored set carries no prior weight, so the rotation angle is 0 and
// no amplitude amplification is possible.
struct DegenerateAngleError : ContractError {
  using ContractError::ContractError;
};

}  // namespace qbayes
