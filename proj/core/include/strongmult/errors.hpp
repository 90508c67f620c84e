#pragma once

#include <stdexcept>
#include <string>

namespace strongmult {

// Rejected input: bad flags, malformed files, out-of-range parameters.
// The command line driver maps this to exit code 1.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematical invariant failed while computing. Exit code 2.
struct InvariantFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline ValidationError parse_error(std::size_t line, const std::string& what) {
  return ValidationError("line " + std::to_string(line) + ": " + what);
}

}  // namespace strongmult
