#pragma once

#include "ldplan/roadmap.hpp"

namespace ldplan {

enum class SearchEngine { kBinaryHeap, kBucket };

struct SearchOptions {
  SearchEngine engine = SearchEngine::kBinaryHeap;
  /// The bucket engine only pays off with few distinct lengths (lattices);
  /// past this many classes it falls back to the binary heap with a notice.
  std::int64_t bucket_max_distinct = 4096;
  int chain_resolution = 16;  // lazy validation on chain problems
};

/// Minimum-cost path from x_init (vertex 0) to any vertex inside the goal
/// ball, or a failure result (cost = infinity) when none is reachable.
///
/// Both engines return equal costs. The bucket engine keys its queues by
/// the exact distinct edge lengths, which is what makes it linear in
/// edges + vertices * distinct lengths on lattice roadmaps.
///
/// On lazy roadmaps the search validates candidate shortest paths in cost
/// order, removes colliding edges, and reruns until a fully validated path
/// emerges; the outcome matches the non-lazy roadmap exactly. The roadmap
/// is mutated (edges removed, collision checks counted).
PlanResult shortest_path(Roadmap& roadmap, const Problem& problem,
                         const SearchOptions& opts = {});

}  // namespace ldplan
