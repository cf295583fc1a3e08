#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace ldplan {

inline int resolve_workers(int workers) {
  if (workers > 0) return workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(chunk_id, begin, end) over a static partition of [0, count).
/// The partition depends only on (count, workers), so any chunk-local
/// results can be merged deterministically by chunk id.
inline void parallel_chunks(
    std::int64_t count, int workers,
    const std::function<void(int, std::int64_t, std::int64_t)>& fn) {
  workers = resolve_workers(workers);
  if (count <= 0) return;
  const int chunks = static_cast<int>(
      std::min<std::int64_t>(workers, count));
  if (chunks <= 1) {
    fn(0, 0, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  const std::int64_t step = (count + chunks - 1) / chunks;
  for (int c = 0; c < chunks; ++c) {
    const std::int64_t begin = c * step;
    const std::int64_t end = std::min(count, begin + step);
    if (begin >= end) break;
    pool.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace ldplan
