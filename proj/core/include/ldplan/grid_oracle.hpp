#pragma once

#include <cstdint>

#include "ldplan/problem.hpp"

namespace ldplan {

struct OracleOptions {
  std::int64_t grid_budget = std::int64_t{1} << 24;  // max grid nodes
};

/// Reference cost of a strongly delta-clear path: Dijkstra over the
/// axis-aligned grid graph (2d-connectivity plus all diagonals) on
/// inflate(env, delta). Start and goal snap to the nearest free grid
/// nodes; every grid edge is segment-checked against the inflated
/// obstacles. Returns an upper approximation of c^(delta) that converges
/// as the resolution grows, or +infinity when the snapped endpoints are
/// infeasible or disconnected. Not defined for chain environments.
double oracle_delta_cost(const Problem& problem, double delta,
                         int grid_resolution, const OracleOptions& opts = {});

}  // namespace ldplan
