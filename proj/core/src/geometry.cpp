#include "ldplan/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ldplan {

double wrap_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = a - two_pi * std::floor((a + std::numbers::pi) / two_pi);
  // floor rounding can land exactly on pi; fold it back to -pi.
  if (w >= std::numbers::pi) w -= two_pi;
  return w;
}

double squared_distance(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double metric_distance(const Point& a, const Point& b, Metric metric) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("metric_distance: dimension mismatch");
  }
  if (metric == Metric::kEuclidean) {
    return std::sqrt(squared_distance(a, b));
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += std::abs(wrap_angle(a[i] - b[i]));
  }
  return s;
}

double path_cost(const PathPolyline& path) {
  if (path.vertices.size() < 2) {
    throw std::invalid_argument("path_cost: path needs at least 2 vertices");
  }
  double c = 0.0;
  for (std::size_t i = 1; i < path.vertices.size(); ++i) {
    c += metric_distance(path.vertices[i - 1], path.vertices[i], path.metric);
  }
  return c;
}

}  // namespace ldplan
