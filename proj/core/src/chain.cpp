#include "ldplan/chain.hpp"

#include <cmath>
#include <stdexcept>

namespace ldplan {

std::vector<std::array<double, 2>> chain_forward_kinematics(
    const Point& theta, const ChainSpec& chain) {
  if (static_cast<int>(theta.size()) != chain.n_links) {
    throw std::invalid_argument("chain_forward_kinematics: wrong joint count");
  }
  std::vector<std::array<double, 2>> joints;
  joints.reserve(theta.size() + 1);
  joints.push_back(chain.base);
  double phi = 0.0;
  double x = chain.base[0];
  double y = chain.base[1];
  for (double t : theta) {
    phi += t;
    x += chain.link_length * std::cos(phi);
    y += chain.link_length * std::sin(phi);
    joints.push_back({x, y});
  }
  return joints;
}

namespace {

Environment workspace_view(const Environment& env) {
  Environment w;
  w.dim = 2;
  w.obstacles = env.obstacles;
  return w;
}

}  // namespace

bool chain_config_collision_free(const Point& theta, const Environment& env) {
  if (!env.chain) {
    throw std::invalid_argument("chain_config_collision_free: env has no chain");
  }
  const auto joints = chain_forward_kinematics(theta, *env.chain);
  const Environment w = workspace_view(env);
  for (std::size_t i = 1; i < joints.size(); ++i) {
    const Point a{joints[i - 1][0], joints[i - 1][1]};
    const Point b{joints[i][0], joints[i][1]};
    if (!segment_collision_free(a, b, w)) return false;
  }
  return true;
}

bool chain_edge_collision_free(const Point& theta_a, const Point& theta_b,
                               const Environment& env, int resolution) {
  if (resolution < 2) {
    throw std::invalid_argument("chain_edge_collision_free: resolution >= 2");
  }
  const std::size_t d = theta_a.size();
  Point delta(d);
  for (std::size_t j = 0; j < d; ++j) {
    delta[j] = wrap_angle(theta_b[j] - theta_a[j]);
  }
  Point config(d);
  for (int i = 0; i < resolution; ++i) {
    const double s = static_cast<double>(i) / (resolution - 1);
    for (std::size_t j = 0; j < d; ++j) {
      config[j] = theta_a[j] + s * delta[j];
    }
    if (!chain_config_collision_free(config, env)) return false;
  }
  return true;
}

}  // namespace ldplan
