#include "ldplan/roadmap.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ldplan/parallel.hpp"
#include "ldplan/spatial_index.hpp"

namespace ldplan {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// {x_init} + free samples (+ goal center), in that order.
Roadmap init_roadmap(const SampleSet& samples, const Problem& problem,
                     const RoadmapOptions& opts) {
  Roadmap rm;
  rm.metric = problem.metric;
  rm.vertices.reserve(samples.size() + 2);
  if (opts.add_init_vertex) rm.vertices.push_back(problem.x_init);
  for (const Point& p : samples.points) {
    if (config_collision_free(p, problem)) rm.vertices.push_back(p);
  }
  if (opts.add_goal_vertex && config_collision_free(problem.goal_center, problem)) {
    rm.vertices.push_back(problem.goal_center);
    rm.goal_vertex = static_cast<std::int32_t>(rm.vertices.size() - 1);
  }
  rm.adjacency.assign(rm.vertices.size(), {});
  return rm;
}

DistanceKind distance_kind(Metric metric) {
  return metric == Metric::kEuclidean ? DistanceKind::kL2
                                      : DistanceKind::kAngularL1;
}

void finalize_stats(Roadmap& rm) {
  std::vector<double> lengths;
  std::int64_t n_edges = 0;
  for (std::uint32_t v = 0; v < rm.adjacency.size(); ++v) {
    std::sort(rm.adjacency[v].begin(), rm.adjacency[v].end(),
              [](const RoadmapEdge& a, const RoadmapEdge& b) { return a.to < b.to; });
    for (const RoadmapEdge& e : rm.adjacency[v]) {
      if (e.to > v) {
        ++n_edges;
        lengths.push_back(e.length);
      }
    }
  }
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
  rm.stats.n_vertices = static_cast<std::int64_t>(rm.vertices.size());
  rm.stats.n_edges = n_edges;
  rm.stats.n_distinct_edge_lengths = static_cast<std::int64_t>(lengths.size());
}

}  // namespace

Roadmap build_roadmap(const SampleSet& samples, const Problem& problem,
                      double radius, const RoadmapOptions& opts) {
  if (!(radius > 0.0)) {
    throw std::invalid_argument("build_roadmap: radius must be > 0");
  }
  const auto start = Clock::now();
  Roadmap rm = init_roadmap(samples, problem, opts);
  rm.radius = radius;
  rm.lazy = opts.lazy;

  const std::size_t n = rm.vertices.size();
  const GridIndex index(rm.vertices, problem.env.dim, radius,
                        distance_kind(problem.metric));

  // Per-vertex candidate scan; vertex v owns pairs (v, u) with u > v so
  // every unordered pair is examined exactly once.
  std::vector<std::vector<RoadmapEdge>> owned(n);
  std::vector<std::int64_t> checks_per_chunk(resolve_workers(opts.workers), 0);
  parallel_chunks(static_cast<std::int64_t>(n), opts.workers,
                  [&](int chunk, std::int64_t begin, std::int64_t end) {
    std::int64_t checks = 0;
    for (std::int64_t v = begin; v < end; ++v) {
      const auto candidates = index.radius_query(rm.vertices[v], radius);
      for (std::uint32_t u : candidates) {
        if (u <= static_cast<std::uint32_t>(v)) continue;
        if (!opts.lazy) {
          ++checks;
          if (!edge_collision_free(rm.vertices[v], rm.vertices[u], problem,
                                   opts.chain_resolution)) {
            continue;
          }
        }
        const double len =
            metric_distance(rm.vertices[v], rm.vertices[u], problem.metric);
        owned[v].push_back({u, len});
      }
    }
    checks_per_chunk[chunk] += checks;
  });

  for (std::uint32_t v = 0; v < n; ++v) {
    for (const RoadmapEdge& e : owned[v]) {
      rm.adjacency[v].push_back(e);
      rm.adjacency[e.to].push_back({v, e.length});
    }
  }
  for (std::int64_t c : checks_per_chunk) rm.stats.n_collision_checks += c;
  finalize_stats(rm);
  rm.stats.build_time = seconds_since(start);
  return rm;
}

Roadmap build_knn_roadmap(const SampleSet& samples, const Problem& problem,
                          std::int64_t k, const RoadmapOptions& opts) {
  const auto start = Clock::now();
  Roadmap rm = init_roadmap(samples, problem, opts);
  rm.k = k;
  rm.lazy = opts.lazy;

  const std::size_t n = rm.vertices.size();
  if (k < 1 || k >= static_cast<std::int64_t>(n)) {
    throw std::invalid_argument("build_knn_roadmap: need 1 <= k < n vertices");
  }
  const double spacing =
      std::pow(1.0 / static_cast<double>(n), 1.0 / problem.env.dim) *
      (problem.metric == Metric::kAngularL1 ? 2.0 * std::numbers::pi : 1.0);
  const GridIndex index(rm.vertices, problem.env.dim, spacing,
                        distance_kind(problem.metric));

  // Selection pass: each vertex picks its k nearest (ties by lower index).
  std::vector<std::vector<std::uint32_t>> selected(n);
  parallel_chunks(static_cast<std::int64_t>(n), opts.workers,
                  [&](int, std::int64_t begin, std::int64_t end) {
    for (std::int64_t v = begin; v < end; ++v) {
      const auto nearest = index.k_nearest(
          rm.vertices[v], static_cast<std::size_t>(k) + 1);
      for (const auto& [dist, u] : nearest) {
        if (u == static_cast<std::uint32_t>(v)) continue;
        selected[v].push_back(u);
        if (selected[v].size() == static_cast<std::size_t>(k)) break;
      }
    }
  });

  // Union symmetrization, then one collision check per unordered pair.
  std::vector<std::vector<std::uint32_t>> pair_high(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    for (std::uint32_t u : selected[v]) {
      const std::uint32_t lo = std::min(v, u);
      const std::uint32_t hi = std::max(v, u);
      pair_high[lo].push_back(hi);
    }
  }
  for (auto& list : pair_high) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  std::vector<std::vector<RoadmapEdge>> owned(n);
  std::vector<std::int64_t> checks_per_chunk(resolve_workers(opts.workers), 0);
  parallel_chunks(static_cast<std::int64_t>(n), opts.workers,
                  [&](int chunk, std::int64_t begin, std::int64_t end) {
    std::int64_t checks = 0;
    for (std::int64_t v = begin; v < end; ++v) {
      for (std::uint32_t u : pair_high[v]) {
        if (!opts.lazy) {
          ++checks;
          if (!edge_collision_free(rm.vertices[v], rm.vertices[u], problem,
                                   opts.chain_resolution)) {
            continue;
          }
        }
        const double len =
            metric_distance(rm.vertices[v], rm.vertices[u], problem.metric);
        owned[v].push_back({u, len});
      }
    }
    checks_per_chunk[chunk] += checks;
  });

  for (std::uint32_t v = 0; v < n; ++v) {
    for (const RoadmapEdge& e : owned[v]) {
      rm.adjacency[v].push_back(e);
      rm.adjacency[e.to].push_back({v, e.length});
    }
  }
  for (std::int64_t c : checks_per_chunk) rm.stats.n_collision_checks += c;
  finalize_stats(rm);
  rm.stats.build_time = seconds_since(start);
  return rm;
}

std::vector<std::uint32_t> goal_vertices(const Roadmap& roadmap,
                                         const Problem& problem) {
  std::vector<std::uint32_t> goals;
  for (std::uint32_t v = 0; v < roadmap.vertices.size(); ++v) {
    if (metric_distance(roadmap.vertices[v], problem.goal_center,
                        problem.metric) <= problem.goal_radius) {
      goals.push_back(v);
    }
  }
  return goals;
}

}  // namespace ldplan
