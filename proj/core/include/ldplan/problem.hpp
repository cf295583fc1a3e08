#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ldplan/environment.hpp"
#include "ldplan/geometry.hpp"

namespace ldplan {

/// Construction and query instrumentation. n_edges counts unordered pairs.
struct Stats {
  std::int64_t n_vertices = 0;
  std::int64_t n_edges = 0;
  std::int64_t n_collision_checks = 0;
  std::int64_t n_distinct_edge_lengths = 0;
  double build_time = 0.0;  // seconds
  double query_time = 0.0;  // seconds
};

/// A planning query: environment, start, goal ball, and cost metric.
struct Problem {
  Environment env;
  Point x_init;
  Point goal_center;
  double goal_radius = 0.0;
  Metric metric = Metric::kEuclidean;
};

struct PlanResult {
  bool success = false;
  std::optional<PathPolyline> path;
  double cost = kInfinity;
  Stats stats;
};

/// True iff a configuration is collision-free for this problem (geometric
/// point test, or full chain-link test for chain environments).
bool config_collision_free(const Point& p, const Problem& problem);

/// True iff the local path a->b is collision-free (exact segment test, or
/// discretized chain sweep with `chain_resolution` states).
bool edge_collision_free(const Point& a, const Point& b, const Problem& problem,
                         int chain_resolution = 16);

/// Validates the Problem invariants: x_init collision-free, goal ball
/// intersecting free space. Throws std::invalid_argument on violation.
void validate_problem(const Problem& problem);

/// Versioned text format (JSON, field "schema": 1). See README for the
/// documented schema.
Problem load_problem(const std::string& path);
void save_problem(const Problem& problem, const std::string& path);
Problem problem_from_json_string(const std::string& text);
std::string problem_to_json_string(const Problem& problem);

}  // namespace ldplan
