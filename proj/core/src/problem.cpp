#include "ldplan/problem.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ldplan/chain.hpp"
#include "ldplan/samplers.hpp"

#include <json.hpp>

namespace ldplan {

using nlohmann::json;

bool config_collision_free(const Point& p, const Problem& problem) {
  if (problem.env.chain) return chain_config_collision_free(p, problem.env);
  return point_collision_free(p, problem.env);
}

bool edge_collision_free(const Point& a, const Point& b, const Problem& problem,
                         int chain_resolution) {
  if (problem.env.chain) {
    return chain_edge_collision_free(a, b, problem.env, chain_resolution);
  }
  return segment_collision_free(a, b, problem.env);
}

void validate_problem(const Problem& problem) {
  const int d = problem.env.dim;
  if (d < 1) throw std::invalid_argument("problem: dim must be >= 1");
  if (static_cast<int>(problem.x_init.size()) != d ||
      static_cast<int>(problem.goal_center.size()) != d) {
    throw std::invalid_argument("problem: endpoint dimension mismatch");
  }
  if (problem.goal_radius <= 0.0) {
    throw std::invalid_argument("problem: goal radius must be > 0");
  }
  if (problem.env.chain && problem.env.chain->n_links != d) {
    throw std::invalid_argument("problem: chain n_links must equal dim");
  }
  if (!config_collision_free(problem.x_init, problem)) {
    throw std::invalid_argument("problem: x_init is in collision");
  }
  if (!config_collision_free(problem.goal_center, problem)) {
    // The goal ball only needs to intersect free space; probe it with a
    // small deterministic low-dispersion set before giving up.
    const SampleSet probes = halton_sequence(256, d);
    bool any_free = false;
    for (const Point& u : probes.points) {
      Point q(d);
      for (int j = 0; j < d; ++j) {
        q[j] = problem.goal_center[j] + (2.0 * u[j] - 1.0) * problem.goal_radius;
      }
      if (metric_distance(q, problem.goal_center, problem.metric) <=
              problem.goal_radius &&
          config_collision_free(q, problem)) {
        any_free = true;
        break;
      }
    }
    if (!any_free) {
      throw std::invalid_argument("problem: goal ball appears fully in collision");
    }
  }
}

namespace {

json point_to_json(const Point& p) { return json(p); }

Point point_from_json(const json& j) { return j.get<Point>(); }

}  // namespace

std::string problem_to_json_string(const Problem& problem) {
  json j;
  j["schema"] = 1;
  j["dim"] = problem.env.dim;
  json obstacles = json::array();
  for (const Obstacle& obs : problem.env.obstacles) {
    json o;
    if (std::holds_alternative<AABox>(obs)) {
      const AABox& box = std::get<AABox>(obs);
      o["type"] = "aabb";
      o["min"] = point_to_json(box.min);
      o["max"] = point_to_json(box.max);
    } else {
      const Sphere& s = std::get<Sphere>(obs);
      o["type"] = "sphere";
      o["center"] = point_to_json(s.center);
      o["radius"] = s.radius;
    }
    obstacles.push_back(std::move(o));
  }
  j["obstacles"] = std::move(obstacles);
  j["x_init"] = point_to_json(problem.x_init);
  j["goal"] = {{"center", point_to_json(problem.goal_center)},
               {"radius", problem.goal_radius}};
  j["metric"] =
      problem.metric == Metric::kEuclidean ? "euclidean" : "angular_l1";
  if (problem.env.chain) {
    const ChainSpec& c = *problem.env.chain;
    j["chain"] = {{"base", {c.base[0], c.base[1]}},
                  {"link_length", c.link_length},
                  {"n_links", c.n_links}};
  }
  return j.dump(2) + "\n";
}

Problem problem_from_json_string(const std::string& text) {
  json j = json::parse(text);
  if (!j.contains("schema") || j["schema"].get<int>() != 1) {
    throw std::invalid_argument("problem file: unsupported schema version");
  }
  Problem p;
  p.env.dim = j.at("dim").get<int>();
  for (const json& o : j.at("obstacles")) {
    const std::string type = o.at("type").get<std::string>();
    if (type == "aabb") {
      AABox box{point_from_json(o.at("min")), point_from_json(o.at("max"))};
      if (box.min.size() != box.max.size()) {
        throw std::invalid_argument("problem file: aabb dimension mismatch");
      }
      for (std::size_t k = 0; k < box.min.size(); ++k) {
        if (!(box.min[k] < box.max[k])) {
          throw std::invalid_argument("problem file: aabb needs min < max");
        }
      }
      p.env.obstacles.emplace_back(std::move(box));
    } else if (type == "sphere") {
      Sphere s{point_from_json(o.at("center")), o.at("radius").get<double>()};
      if (s.radius <= 0.0) {
        throw std::invalid_argument("problem file: sphere radius must be > 0");
      }
      p.env.obstacles.emplace_back(std::move(s));
    } else {
      throw std::invalid_argument("problem file: unknown obstacle type " + type);
    }
  }
  p.x_init = point_from_json(j.at("x_init"));
  p.goal_center = point_from_json(j.at("goal").at("center"));
  p.goal_radius = j.at("goal").at("radius").get<double>();
  const std::string metric = j.at("metric").get<std::string>();
  if (metric == "euclidean") {
    p.metric = Metric::kEuclidean;
  } else if (metric == "angular_l1") {
    p.metric = Metric::kAngularL1;
  } else {
    throw std::invalid_argument("problem file: unknown metric " + metric);
  }
  if (j.contains("chain")) {
    ChainSpec c;
    const json& cj = j["chain"];
    c.base = {cj.at("base")[0].get<double>(), cj.at("base")[1].get<double>()};
    c.link_length = cj.at("link_length").get<double>();
    c.n_links = cj.at("n_links").get<int>();
    p.env.chain = c;
  }
  validate_problem(p);
  return p;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open problem file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return problem_from_json_string(buffer.str());
}

void save_problem(const Problem& problem, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write problem file: " + path);
  out << problem_to_json_string(problem);
}

}  // namespace ldplan
