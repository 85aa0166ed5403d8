#pragma once
// Error taxonomy shared by all modules.  The CLI maps these onto exit codes:
// parse_error -> 1, domain_error -> 2, numeric_error -> 3, verify_error -> 4.
#include <stdexcept>
#include <string>

namespace k3cy {

// Malformed input: expression grammar, JSON shape, bad flags.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally valid input outside the mathematical domain of an operation
// (disconnected cover, non-minimal model, zero denominator, capacity bounds).
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical routine failed to reach its tolerance (step underflow,
// quadrature non-convergence).
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A verification check that was expected to hold did not.
struct verify_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace k3cy
