#pragma once

#include "ldplan/radius.hpp"
#include "ldplan/roadmap.hpp"
#include "ldplan/samplers.hpp"
#include "ldplan/search.hpp"

namespace ldplan {

enum class PlanVariant { kGprm, kKnn, kLazy, kFmt };

std::string to_string(PlanVariant variant);
PlanVariant plan_variant_from_string(const std::string& name);

struct PlanOptions {
  PlanVariant variant = PlanVariant::kGprm;
  SearchEngine engine = SearchEngine::kBinaryHeap;
  bool strict = false;         // Alg.-1-as-printed: no goal vertex injection
  double knn_eps = 0.1;        // epsilon in k_n = (1+eps) n zeta_d r_n^d
  std::int64_t k_override = 0; // explicit k for the knn variant (0 = derive)
  int workers = 0;
  int chain_resolution = 16;
  std::int64_t bucket_max_distinct = 4096;
};

/// End-to-end pipeline: sample -> roadmap -> search. Samples are drawn in
/// [0,1]^d and mapped to [-pi,pi)^d for chain problems. The lazy variant
/// returns costs equal to gprm on identical samples and radius; fmt returns
/// costs >= gprm.
PlanResult plan(const Problem& problem, const SamplerSpec& sampler,
                std::size_t n, const RadiusRule& rule,
                const PlanOptions& opts = {});

/// The sample set `plan` would use (after the chain-space mapping,
/// before collision filtering).
SampleSet plan_samples(const Problem& problem, const SamplerSpec& sampler,
                       std::size_t n);

}  // namespace ldplan
