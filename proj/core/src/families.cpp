#include "ldplan/families.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ldplan/rng.hpp"
#include "ldplan/samplers.hpp"

namespace ldplan {

namespace {

constexpr double w = kMazeGapWidth;

Point uniform_point(int d, double value) { return Point(d, value); }

Problem corner_problem(Environment env) {
  Problem p;
  const int d = env.dim;
  p.env = std::move(env);
  p.x_init = uniform_point(d, 0.05);
  p.goal_center = uniform_point(d, 0.95);
  p.goal_radius = 0.05;
  p.metric = Metric::kEuclidean;
  return p;
}

}  // namespace

Environment maze2d_env() {
  // Serpentine walls; gaps alternate top, bottom, top with width w = 0.1.
  Environment env;
  env.dim = 2;
  env.obstacles = {
      AABox{{0.20, 0.00}, {0.30, 1.0 - w}},
      AABox{{0.45, w},    {0.55, 1.00}},
      AABox{{0.70, 0.00}, {0.80, 1.0 - w}},
  };
  return env;
}

Environment recursive_maze(int d) {
  if (d < 2) throw std::invalid_argument("recursive_maze: d must be >= 2");
  // count(d) = 2*count(d-1) + (d-1); error out before it explodes
  std::int64_t count = 3;
  for (int k = 3; k <= d; ++k) count = 2 * count + (k - 1);
  if (count > 1'000'000) {
    throw std::invalid_argument("recursive_maze: obstacle budget exceeded");
  }

  if (d == 2) return maze2d_env();

  const Environment prev = recursive_maze(d - 1);
  Environment env;
  env.dim = d;

  const auto extrude = [&](double lo, double hi) {
    for (const Obstacle& obs : prev.obstacles) {
      const AABox& box = std::get<AABox>(obs);
      AABox e{box.min, box.max};
      e.min.push_back(lo);
      e.max.push_back(hi);
      env.obstacles.emplace_back(std::move(e));
    }
  };
  extrude(0.00, 0.45);
  extrude(0.55, 1.00);

  // Separating slab {x_d in [0.45,0.55]} minus a cubical opening of side w
  // at alternating corners (all-low for odd d, all-high for even d).
  const bool low_corner = (d % 2) == 1;
  const double open_lo = low_corner ? 0.0 : 1.0 - w;
  const double open_hi = low_corner ? w : 1.0;
  for (int j = 0; j < d - 1; ++j) {
    AABox piece;
    piece.min.assign(d, 0.0);
    piece.max.assign(d, 1.0);
    for (int k = 0; k < j; ++k) {
      piece.min[k] = open_lo;
      piece.max[k] = open_hi;
    }
    if (low_corner) {
      piece.min[j] = w;
    } else {
      piece.max[j] = 1.0 - w;
    }
    piece.min[d - 1] = 0.45;
    piece.max[d - 1] = 0.55;
    env.obstacles.emplace_back(std::move(piece));
  }
  return env;
}

Environment rect_env(int d) {
  Environment env;
  env.dim = d;
  if (d == 2) {
    env.obstacles = {
        AABox{{0.20, 0.20}, {0.40, 0.40}},
        AABox{{0.60, 0.15}, {0.80, 0.35}},
        AABox{{0.40, 0.50}, {0.60, 0.70}},
        AABox{{0.15, 0.65}, {0.35, 0.85}},
        AABox{{0.65, 0.60}, {0.85, 0.80}},
    };
  } else if (d == 3) {
    env.obstacles = {
        AABox{{0.20, 0.20, 0.00}, {0.40, 0.40, 0.60}},
        AABox{{0.60, 0.20, 0.40}, {0.80, 0.40, 1.00}},
        AABox{{0.40, 0.50, 0.20}, {0.60, 0.70, 0.80}},
        AABox{{0.15, 0.60, 0.30}, {0.35, 0.80, 1.00}},
        AABox{{0.65, 0.55, 0.00}, {0.85, 0.75, 0.70}},
    };
  } else {
    throw std::invalid_argument("rect_env: only d in {2,3} is shipped");
  }
  return env;
}

Environment spheres_env(int d, std::uint64_t seed, double coverage) {
  Environment env;
  env.dim = d;
  if (d == 2) {
    env.obstacles = {
        Sphere{{0.30, 0.30}, 0.15}, Sphere{{0.70, 0.32}, 0.12},
        Sphere{{0.50, 0.62}, 0.15}, Sphere{{0.22, 0.75}, 0.10},
        Sphere{{0.82, 0.70}, 0.11},
    };
    return env;
  }
  if (d == 3) {
    env.obstacles = {
        Sphere{{0.30, 0.30, 0.35}, 0.15}, Sphere{{0.70, 0.35, 0.30}, 0.13},
        Sphere{{0.50, 0.60, 0.60}, 0.15}, Sphere{{0.25, 0.70, 0.75}, 0.11},
        Sphere{{0.75, 0.75, 0.40}, 0.12}, Sphere{{0.60, 0.20, 0.75}, 0.10},
    };
    return env;
  }
  if (d != 4) throw std::invalid_argument("spheres_env: d must be in {2,3,4}");

  // 4D: seeded random spheres until the requested spatial coverage is met,
  // estimated on a deterministic Halton probe set.
  const Point start = uniform_point(d, 0.05);
  const Point goal = uniform_point(d, 0.95);
  const SampleSet probes = halton_sequence(4096, d);
  std::vector<bool> covered(probes.size(), false);
  std::size_t n_covered = 0;

  UniformRng rng(seed);
  int attempts = 0;
  while (static_cast<double>(n_covered) / probes.size() < coverage &&
         attempts < 512) {
    ++attempts;
    Sphere s;
    s.center.resize(d);
    for (int j = 0; j < d; ++j) s.center[j] = 0.15 + 0.7 * rng.next();
    s.radius = 0.10 + 0.10 * rng.next();
    // keep the start point and the whole goal ball free
    const double margin = 0.01;
    if (std::sqrt(squared_distance(s.center, start)) <= s.radius + margin) continue;
    if (std::sqrt(squared_distance(s.center, goal)) <= s.radius + 0.05 + margin) continue;
    env.obstacles.emplace_back(s);
    for (std::size_t i = 0; i < probes.size(); ++i) {
      if (!covered[i] &&
          squared_distance(probes.points[i], s.center) <= s.radius * s.radius) {
        covered[i] = true;
        ++n_covered;
      }
    }
  }
  return env;
}

Environment chain_env() {
  Environment env;
  env.dim = 8;
  env.chain = ChainSpec{{0.5, 0.5}, 0.05, 8};
  // one overhead block: the straight chain cannot sweep over the top
  env.obstacles = {AABox{{0.30, 0.75}, {0.70, 0.85}}};
  return env;
}

Problem maze2d_problem() { return corner_problem(maze2d_env()); }

Problem recursive_maze_problem(int d) { return corner_problem(recursive_maze(d)); }

Problem rect_problem(int d) { return corner_problem(rect_env(d)); }

Problem spheres_problem(int d, std::uint64_t seed, double coverage) {
  return corner_problem(spheres_env(d, seed, coverage));
}

Problem chain_problem() {
  Problem p;
  p.env = chain_env();
  p.x_init.assign(8, 0.0);                  // pointing right
  p.goal_center.assign(8, 0.0);
  p.goal_center[0] = std::numbers::pi - 1e-3;  // pointing left
  p.goal_radius = 0.5;
  p.metric = Metric::kAngularL1;
  return p;
}

Problem free_space_problem(int d) {
  Environment env;
  env.dim = d;
  return corner_problem(std::move(env));
}

Problem family_problem(const std::string& family, int d, std::uint64_t seed) {
  if (family == "maze2d") return maze2d_problem();
  if (family == "recursive-maze") return recursive_maze_problem(d);
  if (family == "spheres") return spheres_problem(d, seed);
  if (family == "chain") return chain_problem();
  if (family == "rect") return rect_problem(d);
  if (family == "free") return free_space_problem(d);
  throw std::invalid_argument("unknown problem family: " + family);
}

}  // namespace ldplan
