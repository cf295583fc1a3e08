#include "ldplan/dispersion.hpp"

#include <cmath>
#include <stdexcept>

#include "ldplan/parallel.hpp"
#include "ldplan/rng.hpp"
#include "ldplan/spatial_index.hpp"

namespace ldplan {

namespace {

GridIndex make_index(const SampleSet& set, DispersionNorm norm) {
  // Cell extent near the expected point spacing keeps ring searches short.
  const double spacing =
      std::pow(1.0 / static_cast<double>(set.size()), 1.0 / set.dim);
  return GridIndex(set.points, set.dim, spacing,
                   norm == DispersionNorm::kL2 ? DistanceKind::kL2
                                               : DistanceKind::kLinf);
}

void check_set(const SampleSet& set) {
  if (set.points.empty() || set.dim < 1) {
    throw std::invalid_argument("dispersion: empty sample set");
  }
}

}  // namespace

Interval dispersion_bounds(const SampleSet& set, int resolution,
                           DispersionNorm norm, const DispersionOptions& opts) {
  check_set(set);
  if (resolution < 2) {
    throw std::invalid_argument("dispersion_bounds: resolution must be >= 2");
  }
  const int d = set.dim;
  std::int64_t grid_total = 1;
  for (int j = 0; j < d; ++j) {
    if (grid_total > opts.grid_budget / resolution) {
      throw std::invalid_argument(
          "dispersion_bounds: resolution^d exceeds the grid budget; "
          "use dispersion_monte_carlo for a lo-only estimate");
    }
    grid_total *= resolution;
  }

  const GridIndex index = make_index(set, norm);
  const double step = 1.0 / static_cast<double>(resolution - 1);

  const int workers = resolve_workers(opts.workers);
  std::vector<double> chunk_max(static_cast<std::size_t>(
      std::min<std::int64_t>(workers, grid_total)), 0.0);

  parallel_chunks(grid_total, workers,
                  [&](int chunk, std::int64_t begin, std::int64_t end) {
    Point x(d);
    std::vector<int> idx(d);
    double local_max = 0.0;
    std::uint32_t hint = ~std::uint32_t{0};
    for (std::int64_t g = begin; g < end; ++g) {
      std::int64_t rest = g;
      for (int j = d - 1; j >= 0; --j) {
        idx[j] = static_cast<int>(rest % resolution);
        rest /= resolution;
      }
      for (int j = 0; j < d; ++j) x[j] = idx[j] * step;
      const auto [dist, who] = index.nearest(x, hint);
      hint = who;
      if (dist > local_max) local_max = dist;
    }
    chunk_max[static_cast<std::size_t>(chunk)] = local_max;
  });

  double lo = 0.0;
  for (double m : chunk_max) lo = std::max(lo, m);

  const double cell_diameter = norm == DispersionNorm::kL2
      ? std::sqrt(static_cast<double>(d)) * step
      : step;
  return Interval{lo, lo + cell_diameter};
}

Interval dispersion_monte_carlo(const SampleSet& set, std::int64_t n_probes,
                                std::uint64_t seed, DispersionNorm norm) {
  check_set(set);
  if (n_probes < 1) {
    throw std::invalid_argument("dispersion_monte_carlo: n_probes must be >= 1");
  }
  const GridIndex index = make_index(set, norm);
  UniformRng rng(seed);
  Point x(set.dim);
  double lo = 0.0;
  for (std::int64_t i = 0; i < n_probes; ++i) {
    for (int j = 0; j < set.dim; ++j) x[j] = rng.next();
    lo = std::max(lo, index.nearest(x).first);
  }
  return Interval{lo, kInfinity};
}

}  // namespace ldplan
