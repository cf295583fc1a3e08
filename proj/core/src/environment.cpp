#include "ldplan/environment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ldplan {

namespace {

bool point_in_box(const Point& p, const AABox& box) {
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j] < box.min[j] || p[j] > box.max[j]) return false;
  }
  return true;
}

bool point_in_sphere(const Point& p, const Sphere& s) {
  return squared_distance(p, s.center) <= s.radius * s.radius;
}

// Closed-set slab clipping: true iff [a,b] meets the box (touching counts).
bool segment_hits_box(const Point& a, const Point& b, const AABox& box) {
  double t0 = 0.0;
  double t1 = 1.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double dir = b[j] - a[j];
    if (dir == 0.0) {
      if (a[j] < box.min[j] || a[j] > box.max[j]) return false;
      continue;
    }
    double ta = (box.min[j] - a[j]) / dir;
    double tb = (box.max[j] - a[j]) / dir;
    if (ta > tb) std::swap(ta, tb);
    t0 = std::max(t0, ta);
    t1 = std::min(t1, tb);
    if (t0 > t1) return false;
  }
  return true;
}

// Returns (squared distance from segment to point c, parameter t).
std::pair<double, double> segment_point_sqdist(const Point& a, const Point& b,
                                               const Point& c) {
  double dot = 0.0;
  double len_sq = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double d = b[j] - a[j];
    dot += (c[j] - a[j]) * d;
    len_sq += d * d;
  }
  const double t = len_sq > 0.0 ? std::clamp(dot / len_sq, 0.0, 1.0) : 0.0;
  double sq = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double diff = a[j] + t * (b[j] - a[j]) - c[j];
    sq += diff * diff;
  }
  return {sq, t};
}

bool segment_hits_sphere(const Point& a, const Point& b, const Sphere& s) {
  return segment_point_sqdist(a, b, s.center).first <= s.radius * s.radius;
}

// Exact distance from segment to box. The squared distance is piecewise
// quadratic in the segment parameter, with breakpoints where a coordinate
// crosses a slab bound; each piece is minimized in closed form.
std::pair<double, double> segment_box_distance(const Point& a, const Point& b,
                                               const AABox& box) {
  const std::size_t d = a.size();
  std::vector<double> knots{0.0, 1.0};
  for (std::size_t j = 0; j < d; ++j) {
    const double dir = b[j] - a[j];
    if (dir == 0.0) continue;
    for (double bound : {box.min[j], box.max[j]}) {
      const double t = (bound - a[j]) / dir;
      if (t > 0.0 && t < 1.0) knots.push_back(t);
    }
  }
  std::sort(knots.begin(), knots.end());

  double best_sq = kInfinity;
  double best_t = 0.0;
  const auto eval_sq = [&](double t) {
    double sq = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      const double p = a[j] + t * (b[j] - a[j]);
      const double g = std::max({box.min[j] - p, 0.0, p - box.max[j]});
      sq += g * g;
    }
    return sq;
  };
  const auto consider = [&](double t) {
    const double sq = eval_sq(t);
    if (sq < best_sq) {
      best_sq = sq;
      best_t = t;
    }
  };

  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double u = knots[i];
    const double v = knots[i + 1];
    if (v <= u) continue;
    // On (u,v) each axis term is (alpha_j + beta_j t)^2 for a fixed branch.
    const double mid = 0.5 * (u + v);
    double qa = 0.0, qb = 0.0;  // f'(t) = 2*qa*t + qb on this piece
    for (std::size_t j = 0; j < d; ++j) {
      const double dir = b[j] - a[j];
      const double p_mid = a[j] + mid * dir;
      double alpha, beta;
      if (p_mid < box.min[j]) {
        alpha = box.min[j] - a[j];
        beta = -dir;
      } else if (p_mid > box.max[j]) {
        alpha = a[j] - box.max[j];
        beta = dir;
      } else {
        continue;
      }
      qa += beta * beta;
      qb += 2.0 * alpha * beta;
    }
    consider(u);
    consider(v);
    if (qa > 0.0) {
      const double t_star = -qb / (2.0 * qa);
      if (t_star > u && t_star < v) consider(t_star);
    }
  }
  return {std::sqrt(best_sq), best_t};
}

}  // namespace

bool point_collision_free(const Point& p, const Environment& env) {
  for (const Obstacle& obs : env.obstacles) {
    if (std::holds_alternative<AABox>(obs)) {
      if (point_in_box(p, std::get<AABox>(obs))) return false;
    } else {
      if (point_in_sphere(p, std::get<Sphere>(obs))) return false;
    }
  }
  return true;
}

bool segment_collision_free(const Point& a, const Point& b,
                            const Environment& env) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("segment_collision_free: dimension mismatch");
  }
  for (const Obstacle& obs : env.obstacles) {
    if (std::holds_alternative<AABox>(obs)) {
      if (segment_hits_box(a, b, std::get<AABox>(obs))) return false;
    } else {
      if (segment_hits_sphere(a, b, std::get<Sphere>(obs))) return false;
    }
  }
  return true;
}

double point_obstacle_distance(const Point& p, const Environment& env) {
  double best = kInfinity;
  for (const Obstacle& obs : env.obstacles) {
    double dist;
    if (std::holds_alternative<AABox>(obs)) {
      const AABox& box = std::get<AABox>(obs);
      double sq = 0.0;
      for (std::size_t j = 0; j < p.size(); ++j) {
        const double g = std::max({box.min[j] - p[j], 0.0, p[j] - box.max[j]});
        sq += g * g;
      }
      dist = std::sqrt(sq);
    } else {
      const Sphere& s = std::get<Sphere>(obs);
      dist = std::max(0.0, std::sqrt(squared_distance(p, s.center)) - s.radius);
    }
    best = std::min(best, dist);
  }
  return best;
}

std::pair<double, double> segment_obstacle_distance(const Point& a,
                                                    const Point& b,
                                                    const Environment& env) {
  double best = kInfinity;
  double best_t = 0.0;
  for (const Obstacle& obs : env.obstacles) {
    double dist, t;
    if (std::holds_alternative<AABox>(obs)) {
      std::tie(dist, t) = segment_box_distance(a, b, std::get<AABox>(obs));
    } else {
      const Sphere& s = std::get<Sphere>(obs);
      const auto [sq, ts] = segment_point_sqdist(a, b, s.center);
      dist = std::max(0.0, std::sqrt(sq) - s.radius);
      t = ts;
    }
    if (dist < best) {
      best = dist;
      best_t = t;
    }
  }
  return {best, best_t};
}

ClearanceReport min_clearance(const PathPolyline& path, const Environment& env) {
  if (path.vertices.size() < 2) {
    throw std::invalid_argument("min_clearance: path needs at least 2 vertices");
  }
  ClearanceReport report;
  report.witness = path.vertices.front();
  for (std::size_t i = 1; i < path.vertices.size(); ++i) {
    const Point& a = path.vertices[i - 1];
    const Point& b = path.vertices[i];
    if (!segment_collision_free(a, b, env)) {
      throw std::invalid_argument("min_clearance: path collides");
    }
    const auto [dist, t] = segment_obstacle_distance(a, b, env);
    if (dist < report.min_clearance) {
      report.min_clearance = dist;
      Point w(a.size());
      for (std::size_t j = 0; j < a.size(); ++j) {
        w[j] = a[j] + t * (b[j] - a[j]);
      }
      report.witness = std::move(w);
    }
  }
  return report;
}

Environment inflate(const Environment& env, double delta) {
  if (delta < 0.0) throw std::invalid_argument("inflate: delta must be >= 0");
  Environment out = env;
  for (Obstacle& obs : out.obstacles) {
    if (std::holds_alternative<AABox>(obs)) {
      AABox& box = std::get<AABox>(obs);
      for (double& v : box.min) v -= delta;
      for (double& v : box.max) v += delta;
    } else {
      std::get<Sphere>(obs).radius += delta;
    }
  }
  return out;
}

}  // namespace ldplan
