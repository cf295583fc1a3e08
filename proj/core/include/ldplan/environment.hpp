#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "ldplan/geometry.hpp"

namespace ldplan {

/// Axis-aligned box obstacle, min < max componentwise. Obstacles are closed
/// sets: touching the boundary counts as collision.
struct AABox {
  Point min;
  Point max;
};

struct Sphere {
  Point center;
  double radius = 0.0;
};

using Obstacle = std::variant<AABox, Sphere>;

/// Planar kinematic chain with a fixed base; the configuration space is
/// [-pi,pi)^n_links while the obstacles live in the 2D workspace.
struct ChainSpec {
  std::array<double, 2> base{0.0, 0.0};
  double link_length = 0.1;
  int n_links = 8;
};

struct Environment {
  int dim = 0;  // configuration-space dimension
  std::vector<Obstacle> obstacles;
  std::optional<ChainSpec> chain;
};

struct ClearanceReport {
  double min_clearance = kInfinity;
  Point witness;  // point on the path achieving the minimum
};

/// True iff p touches no obstacle (closed-set semantics).
bool point_collision_free(const Point& p, const Environment& env);

/// Exact test: true iff the closed segment [a,b] intersects no obstacle.
/// Boxes use slab clipping, spheres the quadratic point-to-segment
/// distance; no discretization. Undefined for chain environments (use
/// chain_edge_collision_free).
bool segment_collision_free(const Point& a, const Point& b,
                            const Environment& env);

/// Euclidean distance from p to the obstacle union (0 if inside/touching).
double point_obstacle_distance(const Point& p, const Environment& env);

/// Exact distance from the segment [a,b] to the obstacle union.
/// Returns the distance and the segment parameter achieving it.
std::pair<double, double> segment_obstacle_distance(const Point& a,
                                                    const Point& b,
                                                    const Environment& env);

/// Exact minimum clearance over a collision-free path. Obstacle-free
/// environments report +infinity (the cube walls are not obstacles).
/// Throws if any segment collides.
ClearanceReport min_clearance(const PathPolyline& path, const Environment& env);

/// Grows every box by delta per face and every sphere radius by delta.
/// A path is delta-clear in env iff collision-free in inflate(env, delta),
/// exactly for spheres and conservatively at box corners.
Environment inflate(const Environment& env, double delta);

}  // namespace ldplan
