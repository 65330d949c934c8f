#pragma once

#include <stdexcept>
#include <string>

namespace sqp {

/// Malformed input: bad text/JSON, length mismatch, degenerate ideal where a
/// proper nonzero one is required, invalid characteristic.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured resource cap was exceeded (generators, variables, lattice or
/// search-box size, exponent overflow).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sqp
