#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace ldplan {

/// A configuration in [0,1]^d (or [-pi,pi)^d for kinematic chains).
using Point = std::vector<double>;

constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Cost metrics. kAngularL1 treats every coordinate as an angle on the
/// circle and sums absolute wrapped differences.
enum class Metric { kEuclidean, kAngularL1 };

/// Wraps an angle into [-pi, pi).
double wrap_angle(double a);

/// Distance between two points of equal dimension under `metric`.
/// Throws std::invalid_argument on dimension mismatch.
double metric_distance(const Point& a, const Point& b, Metric metric);

/// Squared Euclidean distance (no dimension check in release builds).
double squared_distance(const Point& a, const Point& b);

/// A piecewise-linear path. Vertices are joined by straight segments
/// (straight in wrapped angle space for kAngularL1).
struct PathPolyline {
  std::vector<Point> vertices;
  Metric metric = Metric::kEuclidean;
};

/// Sum of per-segment metric distances. Requires >= 2 vertices.
double path_cost(const PathPolyline& path);

/// A closed interval, used for certified dispersion bounds.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const { return lo <= x && x <= hi; }
  double width() const { return hi - lo; }
};

}  // namespace ldplan
