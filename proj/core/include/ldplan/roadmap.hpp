#pragma once

#include <cstdint>
#include <vector>

#include "ldplan/problem.hpp"
#include "ldplan/sample_set.hpp"

namespace ldplan {

struct RoadmapEdge {
  std::uint32_t to = 0;
  double length = 0.0;
};

/// Undirected weighted graph over {x_init} + free samples (+ goal center).
/// Adjacency is symmetric and sorted by neighbor index; stored edge lengths
/// satisfy the strict filter length < radius (radius mode).
struct Roadmap {
  std::vector<Point> vertices;  // [0] = x_init
  std::vector<std::vector<RoadmapEdge>> adjacency;
  Stats stats;
  Metric metric = Metric::kEuclidean;
  double radius = 0.0;     // 0 for k-nearest roadmaps
  std::int64_t k = 0;      // 0 for radius roadmaps
  bool lazy = false;       // true: edges stored unchecked, validated in search
  std::int32_t goal_vertex = -1;  // index of the injected goal center, or -1
};

struct RoadmapOptions {
  bool add_init_vertex = true;  // off for pure-lattice structure scans
  bool add_goal_vertex = true;  // off in "strict" mode (Alg. 1 as printed)
  bool lazy = false;
  int workers = 0;              // 0 = hardware concurrency
  int chain_resolution = 16;    // local-path discretization for chains
};

/// gPRM construction: connects every vertex pair with metric distance
/// < radius whose local path is collision-free (or all such pairs when
/// lazy). Colliding samples are dropped. Collision checks are counted once
/// per unordered pair, and results are identical for any worker count.
Roadmap build_roadmap(const SampleSet& samples, const Problem& problem,
                      double radius, const RoadmapOptions& opts = {});

/// k-nearest construction: the edge (u,v) exists iff u is among v's k
/// nearest or vice versa (union symmetrization), ties at the k-th distance
/// broken by lower vertex index, and the local path is collision-free.
Roadmap build_knn_roadmap(const SampleSet& samples, const Problem& problem,
                          std::int64_t k, const RoadmapOptions& opts = {});

/// Vertex indices inside the closed goal ball.
std::vector<std::uint32_t> goal_vertices(const Roadmap& roadmap,
                                         const Problem& problem);

}  // namespace ldplan
