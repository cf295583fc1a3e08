#include "ldplan/spatial_index.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ldplan {

namespace {

double linf_distance(const Point& a, const Point& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

}  // namespace

double GridIndex::distance(const Point& a, const Point& b) const {
  switch (kind_) {
    case DistanceKind::kL2: return std::sqrt(squared_distance(a, b));
    case DistanceKind::kLinf: return linf_distance(a, b);
    case DistanceKind::kAngularL1: return metric_distance(a, b, Metric::kAngularL1);
  }
  return 0.0;
}

GridIndex::GridIndex(const std::vector<Point>& points, int dim,
                     double cell_extent, DistanceKind kind)
    : points_(&points), dim_(dim), kind_(kind) {
  if (dim < 1) throw std::invalid_argument("GridIndex: dim must be >= 1");
  domain_ = (kind == DistanceKind::kAngularL1) ? 2.0 * std::numbers::pi : 1.0;
  origin_ = (kind == DistanceKind::kAngularL1) ? -std::numbers::pi : 0.0;

  // Cap the table at ~4n cells; coarser cells cost time, never correctness.
  double per_axis = std::floor(domain_ / std::max(cell_extent, 1e-12));
  const double cap = std::floor(
      std::pow(4.0 * std::max<double>(points.size(), 1) + 1.0, 1.0 / dim)) + 1.0;
  per_axis = std::clamp(per_axis, 1.0, std::min(cap, 1024.0));
  cells_per_axis_ = static_cast<int>(per_axis);
  cell_extent_ = domain_ / cells_per_axis_;

  std::int64_t total = 1;
  for (int j = 0; j < dim_; ++j) total *= cells_per_axis_;
  buckets_.assign(static_cast<std::size_t>(total), {});
  for (std::uint32_t i = 0; i < points.size(); ++i) {
    buckets_[static_cast<std::size_t>(cell_of(points[i]))].push_back(i);
  }

  max_ring_ = (kind == DistanceKind::kAngularL1) ? (cells_per_axis_ / 2 + 1)
                                                 : cells_per_axis_;
}

std::int64_t GridIndex::cell_of(const Point& p) const {
  std::int64_t id = 0;
  for (int j = 0; j < dim_; ++j) {
    int c = static_cast<int>(std::floor((p[j] - origin_) / cell_extent_));
    c = std::clamp(c, 0, cells_per_axis_ - 1);
    id = id * cells_per_axis_ + c;
  }
  return id;
}

// Collects the ids of cells whose Chebyshev index distance from the query's
// cell equals `ring` (ring 0 = the cell itself). Periodic domains wrap; the
// window is clamped so no cell is visited twice.
void GridIndex::cells_in_ring(const Point& query, int ring,
                              std::vector<std::int64_t>& out) const {
  out.clear();
  std::vector<int> base(dim_);
  for (int j = 0; j < dim_; ++j) {
    int c = static_cast<int>(std::floor((query[j] - origin_) / cell_extent_));
    base[j] = std::clamp(c, 0, cells_per_axis_ - 1);
  }

  const bool periodic = kind_ == DistanceKind::kAngularL1;
  std::vector<std::vector<int>> axis_cells(dim_);
  for (int j = 0; j < dim_; ++j) {
    auto& cells = axis_cells[j];
    if (2 * ring + 1 >= cells_per_axis_) {
      for (int c = 0; c < cells_per_axis_; ++c) cells.push_back(c);
    } else {
      for (int o = -ring; o <= ring; ++o) {
        int c = base[j] + o;
        if (periodic) {
          c = ((c % cells_per_axis_) + cells_per_axis_) % cells_per_axis_;
        } else if (c < 0 || c >= cells_per_axis_) {
          continue;
        }
        cells.push_back(c);
      }
    }
  }

  // odometer over the axis windows, keeping only cells on the ring boundary
  std::vector<std::size_t> pos(dim_, 0);
  while (true) {
    int cheb = 0;
    std::int64_t id = 0;
    for (int j = 0; j < dim_; ++j) {
      const int c = axis_cells[j][pos[j]];
      int delta = std::abs(c - base[j]);
      if (periodic) delta = std::min(delta, cells_per_axis_ - delta);
      cheb = std::max(cheb, delta);
      id = id * cells_per_axis_ + c;
    }
    if (cheb == ring) out.push_back(id);

    int j = dim_ - 1;
    while (j >= 0 && ++pos[j] == axis_cells[j].size()) {
      pos[j] = 0;
      --j;
    }
    if (j < 0) break;
  }
}

std::vector<std::uint32_t> GridIndex::radius_query(const Point& query,
                                                   double radius) const {
  std::vector<std::uint32_t> result;
  if (radius <= 0.0) return result;
  const int reach = static_cast<int>(std::ceil(radius / cell_extent_)) + 1;
  std::vector<std::int64_t> cells;
  for (int ring = 0; ring <= std::min(reach, max_ring_); ++ring) {
    cells_in_ring(query, ring, cells);
    for (std::int64_t id : cells) {
      for (std::uint32_t i : buckets_[static_cast<std::size_t>(id)]) {
        if (distance(query, (*points_)[i]) < radius) result.push_back(i);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::pair<double, std::uint32_t> GridIndex::nearest(const Point& query,
                                                    std::uint32_t hint) const {
  if (points_->empty()) throw std::logic_error("GridIndex::nearest: empty set");
  double best = kInfinity;
  std::uint32_t best_idx = 0;
  if (hint < points_->size()) {
    best = distance(query, (*points_)[hint]);
    best_idx = hint;
  }
  std::vector<std::int64_t> cells;
  for (int ring = 0; ring <= max_ring_; ++ring) {
    // any point in ring >= `ring` is at least (ring-1)*cell_extent away
    if (best <= (ring - 1) * cell_extent_) break;
    cells_in_ring(query, ring, cells);
    for (std::int64_t id : cells) {
      for (std::uint32_t i : buckets_[static_cast<std::size_t>(id)]) {
        const double dist = distance(query, (*points_)[i]);
        if (dist < best || (dist == best && i < best_idx)) {
          best = dist;
          best_idx = i;
        }
      }
    }
  }
  return {best, best_idx};
}

std::vector<std::pair<double, std::uint32_t>> GridIndex::k_nearest(
    const Point& query, std::size_t k) const {
  std::vector<std::pair<double, std::uint32_t>> heap;  // max-heap on (dist, idx)
  std::vector<std::int64_t> cells;
  for (int ring = 0; ring <= max_ring_; ++ring) {
    if (heap.size() == k && !heap.empty() &&
        heap.front().first <= (ring - 1) * cell_extent_) {
      break;
    }
    cells_in_ring(query, ring, cells);
    for (std::int64_t id : cells) {
      for (std::uint32_t i : buckets_[static_cast<std::size_t>(id)]) {
        const double dist = distance(query, (*points_)[i]);
        const std::pair<double, std::uint32_t> cand{dist, i};
        if (heap.size() < k) {
          heap.push_back(cand);
          std::push_heap(heap.begin(), heap.end());
        } else if (!heap.empty() && cand < heap.front()) {
          std::pop_heap(heap.begin(), heap.end());
          heap.back() = cand;
          std::push_heap(heap.begin(), heap.end());
        }
      }
    }
  }
  std::sort(heap.begin(), heap.end());
  return heap;
}

}  // namespace ldplan
