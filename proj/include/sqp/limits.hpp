#pragma once

#include <cstddef>

namespace sqp {

/// Resource caps for the exponential parts of the library. Exceeding a cap
/// raises ResourceError rather than running for hours.
struct Limits {
  std::size_t max_generators = 12;     // mu(I) for lcm-lattice / Betti work
  std::size_t max_variables = 10;      // n for Betti work
  std::size_t max_lattice = 200000;    // distinct lcm-lattice points
  std::size_t max_taylor_generators = 8;
  std::size_t max_closure_box = 2000000;  // lattice points scanned by integral closure

  /// Defaults, overridden by SQP_MAX_GENS / SQP_MAX_VARS when set.
  static Limits from_environment();

  /// Caps used by the corpus harness, where powers and symbolic powers of
  /// small ideals routinely exceed 12 generators.
  static Limits for_verification();
};

}  // namespace sqp
