#include "ldplan/search.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <iostream>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace ldplan {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint32_t kNoParent = ~std::uint32_t{0};

struct DijkstraOutput {
  std::vector<double> dist;
  std::vector<std::uint32_t> parent;
};

// Classic Dijkstra with (key, vertex) pairs; lower index wins ties for
// cross-platform determinism. Early exit once a goal vertex settles.
DijkstraOutput dijkstra_heap(const Roadmap& rm,
                             const std::vector<char>& is_goal) {
  const std::size_t n = rm.vertices.size();
  DijkstraOutput out{std::vector<double>(n, kInfinity),
                     std::vector<std::uint32_t>(n, kNoParent)};
  std::vector<char> settled(n, 0);
  using Entry = std::pair<double, std::uint32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  out.dist[0] = 0.0;
  queue.push({0.0, 0});
  while (!queue.empty()) {
    const auto [key, v] = queue.top();
    queue.pop();
    if (settled[v]) continue;
    settled[v] = 1;
    if (is_goal[v]) break;
    for (const RoadmapEdge& e : rm.adjacency[v]) {
      const double cand = key + e.length;
      if (cand < out.dist[e.to]) {
        out.dist[e.to] = cand;
        out.parent[e.to] = v;
        queue.push({cand, e.to});
      }
    }
  }
  return out;
}

// Dijkstra keyed by the distinct edge lengths: one monotone FIFO per
// length class, fed in settle order, so extraction scans class heads
// instead of maintaining a heap. Linear in edges + vertices * classes.
DijkstraOutput dijkstra_bucket(const Roadmap& rm,
                               const std::vector<char>& is_goal,
                               const std::vector<double>& lengths,
                               const std::vector<std::vector<std::uint32_t>>& edge_class) {
  const std::size_t n = rm.vertices.size();
  const std::size_t n_classes = lengths.size();
  DijkstraOutput out{std::vector<double>(n, kInfinity),
                     std::vector<std::uint32_t>(n, kNoParent)};
  std::vector<char> settled(n, 0);

  struct QueueEntry {
    double key;
    std::uint32_t vertex;
    std::uint32_t parent;
  };
  std::vector<std::deque<QueueEntry>> queues(n_classes);
  std::deque<QueueEntry> source_queue;  // holds only the start vertex
  source_queue.push_back({0.0, 0, kNoParent});
  out.dist[0] = 0.0;

  const auto settle = [&](const QueueEntry& entry) {
    settled[entry.vertex] = 1;
    out.dist[entry.vertex] = entry.key;
    out.parent[entry.vertex] = entry.parent;
    for (std::size_t i = 0; i < rm.adjacency[entry.vertex].size(); ++i) {
      const RoadmapEdge& e = rm.adjacency[entry.vertex][i];
      if (settled[e.to]) continue;
      const std::uint32_t cls = edge_class[entry.vertex][i];
      queues[cls].push_back({entry.key + e.length, e.to, entry.vertex});
    }
  };

  while (true) {
    // pop already-settled heads, then take the minimum over class heads
    double best = kInfinity;
    std::deque<QueueEntry>* best_queue = nullptr;
    const auto consider = [&](std::deque<QueueEntry>& q) {
      while (!q.empty() && settled[q.front().vertex]) q.pop_front();
      if (!q.empty() && q.front().key < best) {
        best = q.front().key;
        best_queue = &q;
      }
    };
    consider(source_queue);
    for (auto& q : queues) consider(q);
    if (best_queue == nullptr) break;

    const QueueEntry entry = best_queue->front();
    best_queue->pop_front();
    settle(entry);
    if (is_goal[entry.vertex]) break;
  }
  return out;
}

std::vector<Point> reconstruct(const Roadmap& rm, const DijkstraOutput& out,
                               std::uint32_t goal) {
  std::vector<Point> vertices;
  for (std::uint32_t v = goal;; v = out.parent[v]) {
    vertices.push_back(rm.vertices[v]);
    if (v == 0) break;
  }
  std::reverse(vertices.begin(), vertices.end());
  // drop zero-length steps (e.g. a sample coinciding with the goal center)
  std::vector<Point> cleaned;
  for (auto& p : vertices) {
    if (cleaned.empty() || cleaned.back() != p) cleaned.push_back(std::move(p));
  }
  return cleaned;
}

std::vector<std::uint32_t> path_vertex_ids(const DijkstraOutput& out,
                                           std::uint32_t goal) {
  std::vector<std::uint32_t> ids;
  for (std::uint32_t v = goal;; v = out.parent[v]) {
    ids.push_back(v);
    if (v == 0) break;
  }
  std::reverse(ids.begin(), ids.end());
  return ids;
}

void remove_edge(Roadmap& rm, std::uint32_t a, std::uint32_t b) {
  const auto drop = [&](std::uint32_t from, std::uint32_t to) {
    auto& adj = rm.adjacency[from];
    adj.erase(std::remove_if(adj.begin(), adj.end(),
                             [to](const RoadmapEdge& e) { return e.to == to; }),
              adj.end());
  };
  drop(a, b);
  drop(b, a);
}

struct GoalSet {
  std::vector<char> mask;
  std::uint32_t best_settled(const std::vector<double>& dist) const {
    std::uint32_t best = kNoParent;
    for (std::uint32_t v = 0; v < mask.size(); ++v) {
      if (mask[v] && dist[v] < kInfinity &&
          (best == kNoParent || dist[v] < dist[best])) {
        best = v;
      }
    }
    return best;
  }
};

}  // namespace

PlanResult shortest_path(Roadmap& rm, const Problem& problem,
                         const SearchOptions& opts) {
  const auto start = Clock::now();
  PlanResult result;
  result.stats = rm.stats;

  GoalSet goals;
  goals.mask.assign(rm.vertices.size(), 0);
  bool any_goal = false;
  for (std::uint32_t v : goal_vertices(rm, problem)) {
    goals.mask[v] = 1;
    any_goal = true;
  }

  // Class table for the bucket engine, built from the exact stored lengths.
  std::vector<double> class_lengths;
  std::vector<std::vector<std::uint32_t>> edge_class;
  SearchEngine engine = opts.engine;
  if (engine == SearchEngine::kBucket) {
    if (rm.stats.n_distinct_edge_lengths > opts.bucket_max_distinct) {
      std::clog << "ldplan: bucket engine disabled ("
                << rm.stats.n_distinct_edge_lengths << " distinct lengths > "
                << opts.bucket_max_distinct << "), using binary heap\n";
      engine = SearchEngine::kBinaryHeap;
    }
  }

  const auto rebuild_classes = [&]() {
    class_lengths.clear();
    for (const auto& adj : rm.adjacency) {
      for (const RoadmapEdge& e : adj) class_lengths.push_back(e.length);
    }
    std::sort(class_lengths.begin(), class_lengths.end());
    class_lengths.erase(std::unique(class_lengths.begin(), class_lengths.end()),
                        class_lengths.end());
    edge_class.assign(rm.adjacency.size(), {});
    for (std::size_t v = 0; v < rm.adjacency.size(); ++v) {
      edge_class[v].reserve(rm.adjacency[v].size());
      for (const RoadmapEdge& e : rm.adjacency[v]) {
        const auto it = std::lower_bound(class_lengths.begin(),
                                         class_lengths.end(), e.length);
        edge_class[v].push_back(
            static_cast<std::uint32_t>(it - class_lengths.begin()));
      }
    }
  };

  const auto run_engine = [&]() {
    if (engine == SearchEngine::kBucket) {
      rebuild_classes();
      return dijkstra_bucket(rm, goals.mask, class_lengths, edge_class);
    }
    return dijkstra_heap(rm, goals.mask);
  };

  // pair key for the lazy check memo
  const auto pack = [](std::uint32_t a, std::uint32_t b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
  };
  std::unordered_set<std::uint64_t> known_valid;

  if (any_goal) {
    for (;;) {
      const DijkstraOutput out = run_engine();
      const std::uint32_t goal = goals.best_settled(out.dist);
      if (goal == kNoParent) break;  // disconnected

      if (!rm.lazy) {
        result.success = true;
        result.cost = out.dist[goal];
        result.path = PathPolyline{reconstruct(rm, out, goal), rm.metric};
        break;
      }

      // Lazy mode: validate this candidate path shortest-first; on the
      // first colliding edge, remove it and search again.
      const auto ids = path_vertex_ids(out, goal);
      bool all_valid = true;
      for (std::size_t i = 1; i < ids.size(); ++i) {
        const std::uint64_t key = pack(ids[i - 1], ids[i]);
        if (known_valid.count(key)) continue;
        ++result.stats.n_collision_checks;
        ++rm.stats.n_collision_checks;
        if (edge_collision_free(rm.vertices[ids[i - 1]], rm.vertices[ids[i]],
                                problem, opts.chain_resolution)) {
          known_valid.insert(key);
        } else {
          remove_edge(rm, ids[i - 1], ids[i]);
          all_valid = false;
          break;
        }
      }
      if (all_valid) {
        result.success = true;
        result.cost = out.dist[goal];
        result.path = PathPolyline{reconstruct(rm, out, goal), rm.metric};
        break;
      }
    }
  }

  result.stats.query_time = std::chrono::duration<double>(Clock::now() - start).count();
  rm.stats.query_time = result.stats.query_time;
  return result;
}

}  // namespace ldplan
