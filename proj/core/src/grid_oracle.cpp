#include "ldplan/grid_oracle.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace ldplan {

double oracle_delta_cost(const Problem& problem, double delta,
                         int grid_resolution, const OracleOptions& opts) {
  if (problem.env.chain) {
    throw std::invalid_argument("oracle_delta_cost: chains are unsupported");
  }
  if (grid_resolution < 2) {
    throw std::invalid_argument("oracle_delta_cost: resolution must be >= 2");
  }
  const int d = problem.env.dim;
  std::int64_t total = 1;
  for (int j = 0; j < d; ++j) {
    if (total > opts.grid_budget / grid_resolution) {
      throw std::invalid_argument(
          "oracle_delta_cost: resolution^d exceeds the grid budget");
    }
    total *= grid_resolution;
  }

  const Environment inflated = inflate(problem.env, delta);
  const double step = 1.0 / static_cast<double>(grid_resolution - 1);

  const auto node_point = [&](std::int64_t id) {
    Point p(d);
    for (int j = d - 1; j >= 0; --j) {
      p[j] = static_cast<double>(id % grid_resolution) * step;
      id /= grid_resolution;
    }
    return p;
  };

  std::vector<char> free_node(static_cast<std::size_t>(total));
  for (std::int64_t id = 0; id < total; ++id) {
    free_node[static_cast<std::size_t>(id)] =
        point_collision_free(node_point(id), inflated) ? 1 : 0;
  }

  // nearest free node to a point (Euclidean, ties to the lower id)
  const auto snap = [&](const Point& target) -> std::int64_t {
    std::int64_t best = -1;
    double best_sq = kInfinity;
    for (std::int64_t id = 0; id < total; ++id) {
      if (!free_node[static_cast<std::size_t>(id)]) continue;
      const double sq = squared_distance(node_point(id), target);
      if (sq < best_sq) {
        best_sq = sq;
        best = id;
      }
    }
    return best;
  };

  const std::int64_t start = snap(problem.x_init);
  if (start < 0) return kInfinity;

  std::vector<char> is_goal(static_cast<std::size_t>(total), 0);
  bool any_goal = false;
  for (std::int64_t id = 0; id < total; ++id) {
    if (!free_node[static_cast<std::size_t>(id)]) continue;
    if (metric_distance(node_point(id), problem.goal_center, problem.metric) <=
        problem.goal_radius) {
      is_goal[static_cast<std::size_t>(id)] = 1;
      any_goal = true;
    }
  }
  if (!any_goal) {
    const std::int64_t g = snap(problem.goal_center);
    if (g < 0) return kInfinity;
    is_goal[static_cast<std::size_t>(g)] = 1;
  }

  // 3^d - 1 neighbor offsets
  std::vector<std::vector<int>> offsets;
  std::vector<int> offset(d, -1);
  while (true) {
    bool all_zero = true;
    for (int v : offset) {
      if (v != 0) all_zero = false;
    }
    if (!all_zero) offsets.push_back(offset);
    int j = d - 1;
    while (j >= 0 && ++offset[j] > 1) {
      offset[j] = -1;
      --j;
    }
    if (j < 0) break;
  }

  std::vector<std::int64_t> strides(d, 1);
  for (int j = d - 2; j >= 0; --j) strides[j] = strides[j + 1] * grid_resolution;

  std::vector<double> dist(static_cast<std::size_t>(total), kInfinity);
  using Entry = std::pair<double, std::int64_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[static_cast<std::size_t>(start)] = 0.0;
  queue.push({0.0, start});
  std::vector<int> coords(d);

  while (!queue.empty()) {
    const auto [key, id] = queue.top();
    queue.pop();
    if (key > dist[static_cast<std::size_t>(id)]) continue;
    if (is_goal[static_cast<std::size_t>(id)]) return key;

    std::int64_t rest = id;
    for (int j = d - 1; j >= 0; --j) {
      coords[j] = static_cast<int>(rest % grid_resolution);
      rest /= grid_resolution;
    }
    const Point a = node_point(id);
    for (const auto& off : offsets) {
      std::int64_t nid = id;
      bool ok = true;
      for (int j = 0; j < d; ++j) {
        const int c = coords[j] + off[j];
        if (c < 0 || c >= grid_resolution) {
          ok = false;
          break;
        }
        nid += static_cast<std::int64_t>(off[j]) * strides[j];
      }
      if (!ok || !free_node[static_cast<std::size_t>(nid)]) continue;
      const Point b = node_point(nid);
      if (!segment_collision_free(a, b, inflated)) continue;
      const double cand = key + std::sqrt(squared_distance(a, b));
      if (cand < dist[static_cast<std::size_t>(nid)]) {
        dist[static_cast<std::size_t>(nid)] = cand;
        queue.push({cand, nid});
      }
    }
  }
  return kInfinity;
}

}  // namespace ldplan
