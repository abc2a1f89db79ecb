#pragma once

#include <stdexcept>

namespace nlsb {

// Invalid user input (config file, CLI flags, bad parameter combinations).
// The CLI maps this to exit code 2.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Numerical failure while stepping (linear solver stagnation, overflow,
// coupling evaluated outside its admissible interval). Exit code 3.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nlsb
