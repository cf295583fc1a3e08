#pragma once

#include <cstdint>
#include <random>

namespace ldplan {

/// Seedable uniform generator with a platform-independent output stream.
///
/// std::mt19937_64 is fully specified by the standard, and the 53-bit
/// shift-and-scale conversion below avoids std::uniform_real_distribution,
/// whose output is implementation-defined. Identical seeds therefore give
/// bit-identical samples on every conforming platform.
class UniformRng {
 public:
  explicit UniformRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1).
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ldplan
