#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ldplan/geometry.hpp"

namespace ldplan {

/// Distance functions the index can answer queries under.
enum class DistanceKind {
  kL2,        // Euclidean on [0,1]^d
  kLinf,      // max-norm on [0,1]^d
  kAngularL1, // wrapped l1 on the torus [-pi,pi)^d
};

/// Uniform grid hash over a fixed point set. Cells have equal extent per
/// axis; kAngularL1 wraps cell neighborhoods around the domain. Queries are
/// deterministic: ties resolve to the lower point index.
class GridIndex {
 public:
  /// cell_extent is in domain units (the torus has extent 2*pi per axis).
  /// The cell count is capped so the table stays O(n) even for tiny cells.
  GridIndex(const std::vector<Point>& points, int dim, double cell_extent,
            DistanceKind kind);

  /// Indices of points with distance(query, p) < radius, ascending index.
  std::vector<std::uint32_t> radius_query(const Point& query, double radius) const;

  /// Nearest point as (distance, index). Requires a nonempty point set.
  /// A valid `hint` index warms the search start; it can change which of
  /// several equidistant points is reported but never the distance.
  std::pair<double, std::uint32_t> nearest(
      const Point& query, std::uint32_t hint = ~std::uint32_t{0}) const;

  /// k nearest points as (distance, index), ascending by (distance, index).
  std::vector<std::pair<double, std::uint32_t>> k_nearest(const Point& query,
                                                          std::size_t k) const;

  double distance(const Point& a, const Point& b) const;

 private:
  std::int64_t cell_of(const Point& p) const;
  void cells_in_ring(const Point& query, int ring,
                     std::vector<std::int64_t>& out) const;

  const std::vector<Point>* points_;
  int dim_;
  DistanceKind kind_;
  double domain_;        // per-axis extent: 1 or 2*pi
  double origin_;        // 0 or -pi
  int cells_per_axis_;
  double cell_extent_;   // domain units
  std::vector<std::vector<std::uint32_t>> buckets_;
  int max_ring_;
};

}  // namespace ldplan
