#include "ldplan/fmt_planner.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <unordered_map>

namespace ldplan {

namespace {

constexpr std::uint32_t kNone = ~std::uint32_t{0};

enum class Status : char { kUnvisited, kOpen, kClosed };

}  // namespace

PlanResult fmt_plan(Roadmap& rm, const Problem& problem, int chain_resolution) {
  const auto start = std::chrono::steady_clock::now();
  PlanResult result;
  result.stats = rm.stats;

  const std::size_t n = rm.vertices.size();
  std::vector<char> is_goal(n, 0);
  for (std::uint32_t v : goal_vertices(rm, problem)) is_goal[v] = 1;

  std::vector<Status> status(n, Status::kUnvisited);
  std::vector<double> cost(n, kInfinity);
  std::vector<std::uint32_t> parent(n, kNone);

  using Entry = std::pair<double, std::uint32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open_heap;
  status[0] = Status::kOpen;
  cost[0] = 0.0;
  open_heap.push({0.0, 0});

  const auto pack = [](std::uint32_t a, std::uint32_t b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
  };
  std::unordered_map<std::uint64_t, bool> edge_checked;
  const auto edge_free = [&](std::uint32_t a, std::uint32_t b) {
    const std::uint64_t key = pack(a, b);
    const auto it = edge_checked.find(key);
    if (it != edge_checked.end()) return it->second;
    ++result.stats.n_collision_checks;
    ++rm.stats.n_collision_checks;
    const bool free = edge_collision_free(rm.vertices[a], rm.vertices[b],
                                          problem, chain_resolution);
    edge_checked.emplace(key, free);
    return free;
  };

  std::uint32_t reached_goal = kNone;
  while (!open_heap.empty()) {
    const auto [z_cost, z] = open_heap.top();
    open_heap.pop();
    if (status[z] != Status::kOpen || z_cost != cost[z]) continue;
    if (is_goal[z]) {
      reached_goal = z;
      break;
    }

    for (const RoadmapEdge& zx : rm.adjacency[z]) {
      const std::uint32_t x = zx.to;
      if (status[x] != Status::kUnvisited) continue;

      // locally best open parent of x (ties to the lower vertex index)
      std::uint32_t best_y = kNone;
      double best_cost = kInfinity;
      for (const RoadmapEdge& xy : rm.adjacency[x]) {
        if (status[xy.to] != Status::kOpen) continue;
        const double c = cost[xy.to] + xy.length;
        if (c < best_cost || (c == best_cost && xy.to < best_y)) {
          best_cost = c;
          best_y = xy.to;
        }
      }
      if (best_y == kNone) continue;
      if (!edge_free(best_y, x)) continue;  // x stays unvisited

      status[x] = Status::kOpen;
      cost[x] = best_cost;
      parent[x] = best_y;
      open_heap.push({best_cost, x});
    }
    status[z] = Status::kClosed;
  }

  if (reached_goal != kNone) {
    std::vector<Point> vertices;
    for (std::uint32_t v = reached_goal;; v = parent[v]) {
      vertices.push_back(rm.vertices[v]);
      if (v == 0) break;
    }
    std::reverse(vertices.begin(), vertices.end());
    std::vector<Point> cleaned;
    for (auto& p : vertices) {
      if (cleaned.empty() || cleaned.back() != p) cleaned.push_back(std::move(p));
    }
    result.success = true;
    result.cost = cost[reached_goal];
    result.path = PathPolyline{std::move(cleaned), rm.metric};
  }
  result.stats.query_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace ldplan
