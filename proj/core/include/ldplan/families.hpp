#pragma once

#include <cstdint>
#include <string>

#include "ldplan/problem.hpp"

namespace ldplan {

/// Gap width shared by the maze families.
inline constexpr double kMazeGapWidth = 0.1;

/// The fixed 2D serpentine maze: three vertical walls with alternating
/// gaps. This geometry is a versioned constant; changing it changes every
/// recorded benchmark number.
Environment maze2d_env();

/// Recursive maze in d >= 2 dimensions: two copies of the (d-1)-maze at
/// x_d in [0,0.45] and [0.55,1], separated by a slab with a cubical
/// opening of side kMazeGapWidth at alternating corners. d = 2 is the
/// fixed base maze. Throws when the obstacle count exceeds the budget.
Environment recursive_maze(int d);

/// Fixed rectangular-obstacle layouts with several homotopy classes.
Environment rect_env(int d);  // d in {2,3}

/// Fixed sphere layouts for d in {2,3}; d = 4 generates spheres from
/// `seed` until the obstacles cover about `coverage` of the cube volume.
Environment spheres_env(int d, std::uint64_t seed = 0, double coverage = 0.3);

/// The 8-link chain workspace: fixed base mid-left, one overhead block the
/// chain must duck around when sweeping between the two horizontal poses.
Environment chain_env();

/// Canonical problems for the families above (start all-0.05, goal ball of
/// radius 0.05 at all-0.95 for the geometric families).
Problem maze2d_problem();
Problem recursive_maze_problem(int d);
Problem rect_problem(int d);
Problem spheres_problem(int d, std::uint64_t seed = 0, double coverage = 0.3);
Problem chain_problem();

/// Obstacle-free d-dimensional problem between the standard corners.
Problem free_space_problem(int d);

/// Family dispatch used by `env gen` and bench configs. Known names:
/// maze2d, recursive-maze, spheres, chain, rect, free.
Problem family_problem(const std::string& family, int d, std::uint64_t seed = 0);

}  // namespace ldplan
