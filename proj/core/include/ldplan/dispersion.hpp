#pragma once

#include <cstdint>

#include "ldplan/sample_set.hpp"

namespace ldplan {

enum class DispersionNorm { kL2, kLinf };

struct DispersionOptions {
  /// Maximum number of grid evaluation points (resolution^d must fit).
  std::int64_t grid_budget = std::int64_t{1} << 24;
  int workers = 0;  // 0 = hardware concurrency
};

/// Certified bounds on the dispersion of `set` over [0,1]^d.
///
/// Evaluates g(x) = min_s ||s - x|| on a uniform grid of resolution^d points
/// including the cube boundary and returns
///   [max g, max g + grid cell diameter in the chosen norm].
/// g is 1-Lipschitz, so the interval is guaranteed to contain the true
/// dispersion. Workers split the grid and combine by max, so the result is
/// bit-identical for any worker count.
///
/// Throws if resolution^d exceeds opts.grid_budget (use
/// dispersion_monte_carlo for a lower bound in that regime).
Interval dispersion_bounds(const SampleSet& set, int resolution,
                           DispersionNorm norm = DispersionNorm::kL2,
                           const DispersionOptions& opts = {});

/// Monte-Carlo fallback for dimensions where a grid is unaffordable:
/// max of g over n_probes seeded uniform points. Lower bound only, so
/// hi is +infinity.
Interval dispersion_monte_carlo(const SampleSet& set, std::int64_t n_probes,
                                std::uint64_t seed,
                                DispersionNorm norm = DispersionNorm::kL2);

}  // namespace ldplan
