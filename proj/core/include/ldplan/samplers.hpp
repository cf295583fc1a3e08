#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ldplan/sample_set.hpp"

namespace ldplan {

/// Hard cap on generated sample counts, shared by the lattice generators.
inline constexpr std::int64_t kMaxSampleBudget = std::int64_t{1} << 24;

/// What to do with lattice points that leave [0,1]^d under a transform.
enum class ClipMode {
  kExtend,  // tile the lattice periodically so the cube stays covered
  kWrap,    // wrap each transformed point back into the cube (mod 1)
};

/// Declarative description of a sampler, mirroring the CLI and bench-config
/// surface. Kind-specific fields are ignored by other kinds.
struct SamplerSpec {
  SamplerKind kind = SamplerKind::kIid;
  int dim = 2;
  std::vector<std::uint64_t> bases;          // halton; empty = first d primes
  std::vector<std::int64_t> counts;          // sukharev per-dimension counts
  std::vector<double> rotation_deg;          // transformed: one angle per plane
  std::vector<double> offset;                // transformed
  ClipMode clip = ClipMode::kExtend;         // transformed
  std::uint64_t seed = 0;                    // iid
  std::shared_ptr<SamplerSpec> base;         // transformed: lattice to transform
  std::shared_ptr<SamplerSpec> low_child;    // mixed: low-dispersion half
  std::shared_ptr<SamplerSpec> other_child;  // mixed: arbitrary half
};

/// First n Halton points in d dimensions. Point i (1-indexed) has coordinate
/// j equal to the radical inverse of i in base bases[j]. Empty bases selects
/// the first d primes. Throws on non-prime or duplicate bases.
SampleSet halton_sequence(std::size_t n, int d,
                          const std::vector<std::uint64_t>& bases = {});

/// Centers of the axis-aligned grid with counts[j] cells along dimension j:
/// coordinate values (2i-1)/(2k), i = 1..k, ordered lexicographically by
/// index tuple. Throws if the product exceeds kMaxSampleBudget.
SampleSet sukharev_lattice(const std::vector<std::int64_t>& counts);

/// n points of the equilateral-triangle tiling of [0,1]^2: rows at vertical
/// pitch sqrt(3)/2*h, horizontal pitch h, alternate rows offset h/2, h chosen
/// so the complete tiling has >= n points, truncated to n in row-major order.
SampleSet triangular_lattice_2d(std::size_t n);

/// Composition of Givens rotations about the cube center (one angle per
/// consecutive coordinate plane, degrees), then a translation by offset.
/// kExtend tiles the base lattice periodically before transforming so that
/// [0,1]^d remains covered at the original density; kWrap maps transformed
/// points back into the cube modulo 1. Throws if the result is empty.
SampleSet transform_lattice(const SampleSet& base,
                            const std::vector<double>& rotation_deg,
                            const std::vector<double>& offset,
                            ClipMode clip = ClipMode::kExtend);

/// n i.i.d. uniform points on [0,1]^d from UniformRng(seed).
SampleSet iid_uniform(std::size_t n, int d, std::uint64_t seed);

/// ceil(n/2) points from spec.low_child plus floor(n/2) from
/// spec.other_child. Requires spec.kind == kMixed.
SampleSet mixed_sequence(const SamplerSpec& spec, std::size_t n);

/// Dispatch on spec.kind. For lattices, n is rounded up to the nearest
/// achievable count (see weighted_lattice_counts); other kinds produce
/// exactly n points.
SampleSet generate_samples(const SamplerSpec& spec, std::size_t n);

/// Smallest weighted-lattice counts (k-1,..,k-1,k,..,k) whose product is
/// >= n, incrementing dimensions from the last index down. This realizes
/// the achievable counts n = (k-1)^m * k^(d-m).
std::vector<std::int64_t> weighted_lattice_counts(std::size_t n, int d);

bool is_prime(std::uint64_t p);
std::vector<std::uint64_t> first_primes(int count);

}  // namespace ldplan
