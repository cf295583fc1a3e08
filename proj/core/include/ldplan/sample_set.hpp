#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ldplan/geometry.hpp"

namespace ldplan {

enum class SamplerKind {
  kHalton,
  kSukharev,
  kTriangular,
  kIid,
  kTransformed,
  kMixed,
};

std::string to_string(SamplerKind kind);
SamplerKind sampler_kind_from_string(const std::string& name);

/// How a sample set was produced. per_dim_counts holds the grid counts for
/// Sukharev lattices and {rows, full tiling count} for triangular lattices.
struct Provenance {
  SamplerKind kind = SamplerKind::kIid;
  std::optional<std::uint64_t> seed;
  std::vector<std::int64_t> per_dim_counts;
};

/// An ordered list of configurations in [0,1]^d.
struct SampleSet {
  std::vector<Point> points;
  int dim = 0;
  Provenance provenance;

  std::size_t size() const { return points.size(); }
};

}  // namespace ldplan
