#include "ldplan/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "ldplan/rng.hpp"

namespace ldplan {

std::string to_string(SamplerKind kind) {
  switch (kind) {
    case SamplerKind::kHalton: return "halton";
    case SamplerKind::kSukharev: return "sukharev";
    case SamplerKind::kTriangular: return "triangular";
    case SamplerKind::kIid: return "iid";
    case SamplerKind::kTransformed: return "transformed";
    case SamplerKind::kMixed: return "mixed";
  }
  return "unknown";
}

SamplerKind sampler_kind_from_string(const std::string& name) {
  if (name == "halton") return SamplerKind::kHalton;
  if (name == "sukharev") return SamplerKind::kSukharev;
  if (name == "triangular") return SamplerKind::kTriangular;
  if (name == "iid") return SamplerKind::kIid;
  if (name == "transformed") return SamplerKind::kTransformed;
  if (name == "mixed") return SamplerKind::kMixed;
  throw std::invalid_argument("unknown sampler kind: " + name);
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> first_primes(int count) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; static_cast<int>(primes.size()) < count; ++p) {
    if (is_prime(p)) primes.push_back(p);
  }
  return primes;
}

namespace {

double radical_inverse(std::uint64_t index, std::uint64_t base) {
  double inv_base = 1.0 / static_cast<double>(base);
  double scale = inv_base;
  double value = 0.0;
  while (index > 0) {
    value += static_cast<double>(index % base) * scale;
    index /= base;
    scale *= inv_base;
  }
  return value;
}

}  // namespace

SampleSet halton_sequence(std::size_t n, int d,
                          const std::vector<std::uint64_t>& bases_in) {
  if (n < 1) throw std::invalid_argument("halton_sequence: n must be >= 1");
  if (d < 1) throw std::invalid_argument("halton_sequence: d must be >= 1");

  std::vector<std::uint64_t> bases =
      bases_in.empty() ? first_primes(d) : bases_in;
  if (static_cast<int>(bases.size()) != d) {
    throw std::invalid_argument("halton_sequence: need one base per dimension");
  }
  std::set<std::uint64_t> distinct(bases.begin(), bases.end());
  if (distinct.size() != bases.size()) {
    throw std::invalid_argument("halton_sequence: duplicate base");
  }
  for (auto b : bases) {
    if (!is_prime(b)) {
      throw std::invalid_argument("halton_sequence: base " + std::to_string(b) +
                                  " is not prime");
    }
  }

  SampleSet out;
  out.dim = d;
  out.provenance.kind = SamplerKind::kHalton;
  out.points.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    Point p(d);
    for (int j = 0; j < d; ++j) p[j] = radical_inverse(i, bases[j]);
    out.points.push_back(std::move(p));
  }
  return out;
}

SampleSet sukharev_lattice(const std::vector<std::int64_t>& counts) {
  if (counts.empty()) {
    throw std::invalid_argument("sukharev_lattice: empty counts");
  }
  std::int64_t total = 1;
  for (auto k : counts) {
    if (k < 1) throw std::invalid_argument("sukharev_lattice: counts must be >= 1");
    if (total > kMaxSampleBudget / k) {
      throw std::invalid_argument("sukharev_lattice: count product exceeds sample budget");
    }
    total *= k;
  }

  const int d = static_cast<int>(counts.size());
  SampleSet out;
  out.dim = d;
  out.provenance.kind = SamplerKind::kSukharev;
  out.provenance.per_dim_counts = counts;
  out.points.reserve(static_cast<std::size_t>(total));

  std::vector<std::int64_t> index(d, 0);
  for (std::int64_t i = 0; i < total; ++i) {
    Point p(d);
    for (int j = 0; j < d; ++j) {
      p[j] = static_cast<double>(2 * index[j] + 1) / static_cast<double>(2 * counts[j]);
    }
    out.points.push_back(std::move(p));
    // lexicographic increment, last dimension fastest
    for (int j = d - 1; j >= 0; --j) {
      if (++index[j] < counts[j]) break;
      index[j] = 0;
    }
  }
  return out;
}

namespace {

struct TriangularGrid {
  std::int64_t rows = 0;
  double h = 0.0;       // horizontal pitch
  double row_pitch = 0; // sqrt(3)/2 * h
  std::int64_t full_count = 0;
  std::int64_t even_cols = 0;
  std::int64_t odd_cols = 0;
};

// Odd row counts keep the first and last rows unstaggered, which covers the
// cube corners much better than an even split.
TriangularGrid triangular_grid_for(std::size_t n) {
  constexpr double sqrt3 = std::numbers::sqrt3;
  for (std::int64_t rows = 1;; rows += 2) {
    TriangularGrid g;
    g.rows = rows;
    g.row_pitch = 1.0 / static_cast<double>(rows);
    g.h = 2.0 * g.row_pitch / sqrt3;
    g.even_cols = static_cast<std::int64_t>(std::floor(1.0 / g.h)) + 1;
    g.odd_cols = static_cast<std::int64_t>(std::floor((1.0 - g.h / 2.0) / g.h)) + 1;
    const std::int64_t even_rows = (rows + 1) / 2;
    const std::int64_t odd_rows = rows / 2;
    g.full_count = even_rows * g.even_cols + odd_rows * g.odd_cols;
    if (g.full_count >= static_cast<std::int64_t>(n)) return g;
    if (g.full_count > kMaxSampleBudget) {
      throw std::invalid_argument("triangular_lattice_2d: n exceeds sample budget");
    }
  }
}

}  // namespace

SampleSet triangular_lattice_2d(std::size_t n) {
  if (n < 1) throw std::invalid_argument("triangular_lattice_2d: n must be >= 1");

  const TriangularGrid g = triangular_grid_for(n);

  const double even_width = static_cast<double>(g.even_cols - 1) * g.h;
  const double odd_width = g.odd_cols > 0
      ? g.h / 2.0 + static_cast<double>(g.odd_cols - 1) * g.h
      : 0.0;
  const double width = std::max(even_width, odd_width);
  const double x_shift = (1.0 - width) / 2.0;

  SampleSet out;
  out.dim = 2;
  out.provenance.kind = SamplerKind::kTriangular;
  out.provenance.per_dim_counts = {g.rows, g.full_count};
  out.points.reserve(n);

  for (std::int64_t r = 0; r < g.rows && out.points.size() < n; ++r) {
    const bool odd = (r % 2) != 0;
    const double y = (static_cast<double>(r) + 0.5) * g.row_pitch;
    const std::int64_t cols = odd ? g.odd_cols : g.even_cols;
    const double x0 = x_shift + (odd ? g.h / 2.0 : 0.0);
    for (std::int64_t c = 0; c < cols && out.points.size() < n; ++c) {
      const double x = x0 + static_cast<double>(c) * g.h;
      out.points.push_back({std::clamp(x, 0.0, 1.0), std::clamp(y, 0.0, 1.0)});
    }
  }
  return out;
}

namespace {

using Matrix = std::vector<std::vector<double>>;

Matrix identity(int d) {
  Matrix m(d, std::vector<double>(d, 0.0));
  for (int i = 0; i < d; ++i) m[i][i] = 1.0;
  return m;
}

// Left-multiply m by the Givens rotation in plane (i, i+1).
void apply_givens(Matrix& m, int i, double angle_rad) {
  const double c = std::cos(angle_rad);
  const double s = std::sin(angle_rad);
  const int d = static_cast<int>(m.size());
  for (int col = 0; col < d; ++col) {
    const double a = m[i][col];
    const double b = m[i + 1][col];
    m[i][col] = c * a - s * b;
    m[i + 1][col] = s * a + c * b;
  }
}

Point mat_apply(const Matrix& m, const Point& x) {
  const int d = static_cast<int>(x.size());
  Point y(d, 0.0);
  for (int i = 0; i < d; ++i) {
    double s = 0.0;
    for (int j = 0; j < d; ++j) s += m[i][j] * x[j];
    y[i] = s;
  }
  return y;
}

bool in_unit_cube(const Point& p) {
  for (double v : p) {
    if (v < 0.0 || v > 1.0) return false;
  }
  return true;
}

}  // namespace

SampleSet transform_lattice(const SampleSet& base,
                            const std::vector<double>& rotation_deg,
                            const std::vector<double>& offset_in,
                            ClipMode clip) {
  const int d = base.dim;
  if (d < 1 || base.points.empty()) {
    throw std::invalid_argument("transform_lattice: empty base set");
  }
  if (!rotation_deg.empty() && static_cast<int>(rotation_deg.size()) != d - 1) {
    throw std::invalid_argument(
        "transform_lattice: need one rotation angle per coordinate plane");
  }
  Point offset(d, 0.0);
  if (!offset_in.empty()) {
    if (static_cast<int>(offset_in.size()) != d) {
      throw std::invalid_argument("transform_lattice: offset dimension mismatch");
    }
    for (int j = 0; j < d; ++j) {
      offset[j] = offset_in[j] - std::floor(offset_in[j]);  // mod 1
    }
  }

  Matrix rot = identity(d);
  for (int i = 0; i + 1 < d; ++i) {
    const double angle = rotation_deg.empty()
        ? 0.0
        : rotation_deg[i] * std::numbers::pi / 180.0;
    if (angle != 0.0) apply_givens(rot, i, angle);
  }

  const Point center(d, 0.5);
  SampleSet out;
  out.dim = d;
  out.provenance.kind = SamplerKind::kTransformed;

  if (clip == ClipMode::kWrap) {
    for (const Point& p : base.points) {
      Point x(d);
      for (int j = 0; j < d; ++j) x[j] = p[j] - center[j];
      Point q = mat_apply(rot, x);
      for (int j = 0; j < d; ++j) {
        double v = q[j] + center[j] + offset[j];
        v -= std::floor(v);
        q[j] = v;
      }
      out.points.push_back(std::move(q));
    }
    return out;
  }

  // kExtend: transform the periodic extension of the lattice and keep the
  // points that land in the cube. Any point that can land inside satisfies
  // ||p + t - center|| <= sqrt(d)/2 + ||offset|| <= 1.5*sqrt(d).
  const double sqrt_d = std::sqrt(static_cast<double>(d));
  const double reach = 1.5 * sqrt_d + 1e-9;
  const int range = static_cast<int>(std::ceil(reach + 0.5));

  std::vector<int> t(d, -range);
  const auto advance = [&]() {
    for (int j = d - 1; j >= 0; --j) {
      if (++t[j] <= range) return true;
      t[j] = -range;
    }
    return false;
  };

  do {
    double t_norm_sq = 0.0;
    for (int j = 0; j < d; ++j) t_norm_sq += static_cast<double>(t[j]) * t[j];
    // translate cells further than reach + cell circumradius cannot reach the cube
    if (t_norm_sq > (reach + sqrt_d / 2.0) * (reach + sqrt_d / 2.0)) continue;

    for (const Point& p : base.points) {
      Point x(d);
      double norm_sq = 0.0;
      for (int j = 0; j < d; ++j) {
        x[j] = p[j] + static_cast<double>(t[j]) - center[j];
        norm_sq += x[j] * x[j];
      }
      if (norm_sq > reach * reach) continue;
      Point q = mat_apply(rot, x);
      for (int j = 0; j < d; ++j) q[j] += center[j] + offset[j];
      if (in_unit_cube(q)) out.points.push_back(std::move(q));
    }
  } while (advance());

  if (out.points.empty()) {
    throw std::runtime_error("transform_lattice: no points left after clipping");
  }
  return out;
}

SampleSet iid_uniform(std::size_t n, int d, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("iid_uniform: n must be >= 1");
  if (d < 1) throw std::invalid_argument("iid_uniform: d must be >= 1");
  UniformRng rng(seed);
  SampleSet out;
  out.dim = d;
  out.provenance.kind = SamplerKind::kIid;
  out.provenance.seed = seed;
  out.points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Point p(d);
    for (int j = 0; j < d; ++j) p[j] = rng.next();
    out.points.push_back(std::move(p));
  }
  return out;
}

SampleSet mixed_sequence(const SamplerSpec& spec, std::size_t n) {
  if (spec.kind != SamplerKind::kMixed) {
    throw std::invalid_argument("mixed_sequence: spec.kind must be mixed");
  }
  if (!spec.low_child || !spec.other_child) {
    throw std::invalid_argument("mixed_sequence: missing child specs");
  }
  const std::size_t n_low = (n + 1) / 2;
  const std::size_t n_other = n / 2;

  SampleSet low = generate_samples(*spec.low_child, n_low);
  SampleSet out;
  out.dim = low.dim;
  out.provenance.kind = SamplerKind::kMixed;
  out.points = std::move(low.points);
  if (n_other > 0) {
    SampleSet other = generate_samples(*spec.other_child, n_other);
    if (other.dim != out.dim) {
      throw std::invalid_argument("mixed_sequence: child dimension mismatch");
    }
    // the arbitrary half is truncated to exactly floor(n/2) points
    other.points.resize(std::min(other.points.size(), n_other));
    for (auto& p : other.points) out.points.push_back(std::move(p));
    out.provenance.seed = other.provenance.seed;
  }
  return out;
}

std::vector<std::int64_t> weighted_lattice_counts(std::size_t n, int d) {
  if (d < 1) throw std::invalid_argument("weighted_lattice_counts: d must be >= 1");
  for (std::int64_t k = 1;; ++k) {
    // products (k-1)^m * k^(d-m) ascend as m goes d-1 -> 0
    for (int m = d - 1; m >= 0; --m) {
      std::int64_t product = 1;
      bool overflow = false;
      for (int j = 0; j < d; ++j) {
        const std::int64_t factor = (j < m) ? k - 1 : k;
        if (factor == 0) { product = 0; break; }
        if (product > kMaxSampleBudget / factor) { overflow = true; break; }
        product *= factor;
      }
      if (overflow) {
        throw std::invalid_argument("weighted_lattice_counts: n exceeds sample budget");
      }
      if (product >= static_cast<std::int64_t>(n)) {
        std::vector<std::int64_t> counts(d);
        for (int j = 0; j < d; ++j) counts[j] = (j < m) ? k - 1 : k;
        return counts;
      }
    }
  }
}

SampleSet generate_samples(const SamplerSpec& spec, std::size_t n) {
  switch (spec.kind) {
    case SamplerKind::kHalton:
      return halton_sequence(n, spec.dim, spec.bases);
    case SamplerKind::kSukharev:
      if (!spec.counts.empty()) return sukharev_lattice(spec.counts);
      return sukharev_lattice(weighted_lattice_counts(n, spec.dim));
    case SamplerKind::kTriangular:
      if (spec.dim != 2) {
        throw std::invalid_argument("triangular lattice requires dim == 2");
      }
      return triangular_lattice_2d(n);
    case SamplerKind::kIid:
      return iid_uniform(n, spec.dim, spec.seed);
    case SamplerKind::kTransformed: {
      if (!spec.base) {
        throw std::invalid_argument("transformed sampler: missing base spec");
      }
      SampleSet base = generate_samples(*spec.base, n);
      return transform_lattice(base, spec.rotation_deg, spec.offset, spec.clip);
    }
    case SamplerKind::kMixed:
      return mixed_sequence(spec, n);
  }
  throw std::logic_error("generate_samples: unhandled sampler kind");
}

}  // namespace ldplan
