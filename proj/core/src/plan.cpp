#include "ldplan/plan.hpp"

#include <numbers>
#include <stdexcept>

#include "ldplan/fmt_planner.hpp"

namespace ldplan {

std::string to_string(PlanVariant variant) {
  switch (variant) {
    case PlanVariant::kGprm: return "gprm";
    case PlanVariant::kKnn: return "knn";
    case PlanVariant::kLazy: return "lazy";
    case PlanVariant::kFmt: return "fmt";
  }
  return "unknown";
}

PlanVariant plan_variant_from_string(const std::string& name) {
  if (name == "gprm") return PlanVariant::kGprm;
  if (name == "knn") return PlanVariant::kKnn;
  if (name == "lazy") return PlanVariant::kLazy;
  if (name == "fmt") return PlanVariant::kFmt;
  throw std::invalid_argument("unknown plan variant: " + name);
}

SampleSet plan_samples(const Problem& problem, const SamplerSpec& sampler,
                       std::size_t n) {
  SampleSet samples;
  if (n > 0) {
    samples = generate_samples(sampler, n);
  } else {
    samples.dim = problem.env.dim;
  }
  if (samples.dim != problem.env.dim) {
    throw std::invalid_argument("plan: sampler dimension != problem dimension");
  }
  if (problem.metric == Metric::kAngularL1) {
    for (Point& p : samples.points) {
      for (double& v : p) v = 2.0 * std::numbers::pi * v - std::numbers::pi;
    }
  }
  return samples;
}

PlanResult plan(const Problem& problem, const SamplerSpec& sampler,
                std::size_t n, const RadiusRule& rule, const PlanOptions& opts) {
  validate_problem(problem);
  const SampleSet samples = plan_samples(problem, sampler, n);

  const int d = problem.env.dim;
  const double radius =
      (rule.kind == RadiusRuleKind::kExplicit)
          ? connection_radius(std::max<std::int64_t>(2, n), d, rule, problem.metric)
          : connection_radius(static_cast<std::int64_t>(n), d, rule, problem.metric);

  RoadmapOptions rm_opts;
  rm_opts.add_goal_vertex = !opts.strict;
  rm_opts.workers = opts.workers;
  rm_opts.chain_resolution = opts.chain_resolution;

  SearchOptions search_opts;
  search_opts.engine = opts.engine;
  search_opts.bucket_max_distinct = opts.bucket_max_distinct;
  search_opts.chain_resolution = opts.chain_resolution;

  switch (opts.variant) {
    case PlanVariant::kGprm: {
      Roadmap rm = build_roadmap(samples, problem, radius, rm_opts);
      return shortest_path(rm, problem, search_opts);
    }
    case PlanVariant::kLazy: {
      rm_opts.lazy = true;
      Roadmap rm = build_roadmap(samples, problem, radius, rm_opts);
      return shortest_path(rm, problem, search_opts);
    }
    case PlanVariant::kKnn: {
      const std::int64_t n_vertices_bound =
          static_cast<std::int64_t>(samples.size()) + 2;
      std::int64_t k = opts.k_override > 0
          ? opts.k_override
          : knn_count(static_cast<std::int64_t>(n), d, radius, opts.knn_eps);
      if (k < 1 || k >= n_vertices_bound - 1) {
        throw std::invalid_argument(
            "plan: knn variant needs 1 <= k < n (got k=" + std::to_string(k) +
            "); provide k_override or a workable rule");
      }
      Roadmap rm = build_knn_roadmap(samples, problem, k, rm_opts);
      return shortest_path(rm, problem, search_opts);
    }
    case PlanVariant::kFmt: {
      rm_opts.lazy = true;
      Roadmap rm = build_roadmap(samples, problem, radius, rm_opts);
      return fmt_plan(rm, problem, opts.chain_resolution);
    }
  }
  throw std::logic_error("plan: unhandled variant");
}

}  // namespace ldplan
