#pragma once

#include <vector>

#include "ldplan/environment.hpp"

namespace ldplan {

/// Workspace positions of the chain joints: base first, then one position
/// per link end. Joint i sits at base + sum_{j<=i} L*(cos phi_j, sin phi_j)
/// with cumulative angle phi_j = sum_{k<=j} theta_k.
std::vector<std::array<double, 2>> chain_forward_kinematics(
    const Point& theta, const ChainSpec& chain);

/// True iff every link segment avoids the 2D workspace obstacles.
bool chain_config_collision_free(const Point& theta, const Environment& env);

/// Linear interpolation in wrapped angle space, checked at `resolution`
/// evenly spaced configurations including both endpoints. Conservative up
/// to discretization; refining the resolution can only add rejections.
bool chain_edge_collision_free(const Point& theta_a, const Point& theta_b,
                               const Environment& env, int resolution);

}  // namespace ldplan
