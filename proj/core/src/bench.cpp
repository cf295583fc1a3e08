#include "ldplan/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ldplan/dispersion.hpp"
#include "ldplan/families.hpp"
#include "ldplan/grid_oracle.hpp"
#include "ldplan/parallel.hpp"

#include <json.hpp>

namespace ldplan {

using nlohmann::json;

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

bool sampler_is_randomized(const SamplerSpec& spec) {
  switch (spec.kind) {
    case SamplerKind::kIid: return true;
    case SamplerKind::kMixed:
      return (spec.low_child && sampler_is_randomized(*spec.low_child)) ||
             (spec.other_child && sampler_is_randomized(*spec.other_child));
    case SamplerKind::kTransformed:
      return spec.base && sampler_is_randomized(*spec.base);
    default: return false;
  }
}

void set_seed_recursive(SamplerSpec& spec, std::uint64_t seed) {
  spec.seed = seed;
  if (spec.base) set_seed_recursive(*spec.base, seed);
  if (spec.low_child) set_seed_recursive(*spec.low_child, seed);
  if (spec.other_child) set_seed_recursive(*spec.other_child, seed);
}

SamplerSpec sampler_spec_from_json(const json& j, int problem_dim,
                                   std::string* name_out) {
  SamplerSpec spec;
  spec.dim = problem_dim;
  std::string kind = j.at("kind").get<std::string>();
  if (name_out) *name_out = j.value("name", kind);

  if (kind == "lattice") {
    // paper convention: triangular tiling in 2D, Sukharev grid above
    kind = problem_dim == 2 ? "triangular" : "sukharev";
  }
  spec.kind = sampler_kind_from_string(kind);
  if (j.contains("bases")) spec.bases = j["bases"].get<std::vector<std::uint64_t>>();
  if (j.contains("counts")) spec.counts = j["counts"].get<std::vector<std::int64_t>>();
  if (j.contains("rotation_deg")) {
    spec.rotation_deg = j["rotation_deg"].get<std::vector<double>>();
  }
  if (j.contains("offset")) spec.offset = j["offset"].get<std::vector<double>>();
  if (j.contains("clip")) {
    const std::string clip = j["clip"].get<std::string>();
    if (clip == "extend") spec.clip = ClipMode::kExtend;
    else if (clip == "wrap") spec.clip = ClipMode::kWrap;
    else throw std::invalid_argument("bench config: unknown clip mode " + clip);
  }
  if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("base")) {
    spec.base = std::make_shared<SamplerSpec>(
        sampler_spec_from_json(j["base"], problem_dim, nullptr));
  }
  if (j.contains("low")) {
    spec.low_child = std::make_shared<SamplerSpec>(
        sampler_spec_from_json(j["low"], problem_dim, nullptr));
  }
  if (j.contains("other")) {
    spec.other_child = std::make_shared<SamplerSpec>(
        sampler_spec_from_json(j["other"], problem_dim, nullptr));
  }
  return spec;
}

RadiusRule rule_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "gamma_prm") return RadiusRule::gamma_prm(j.value("multiplier", 2.2));
  if (kind == "power") return RadiusRule::power(j.value("multiplier", 1.0));
  if (kind == "explicit") return RadiusRule::explicit_value(j.at("value").get<double>());
  throw std::invalid_argument("bench config: unknown radius rule " + kind);
}

}  // namespace

ExperimentConfig experiment_config_from_json(const std::string& text) {
  const json j = json::parse(text);
  if (!j.contains("schema") || j["schema"].get<int>() != 1) {
    throw std::invalid_argument("bench config: unsupported schema version");
  }
  ExperimentConfig config;

  const json& pj = j.at("problem");
  if (pj.is_string()) {
    config.problem = load_problem(pj.get<std::string>());
    config.problem_name = pj.get<std::string>();
  } else {
    const std::string family = pj.at("family").get<std::string>();
    const int dim = pj.value("dim", 2);
    const std::uint64_t seed = pj.value("seed", std::uint64_t{0});
    config.problem = family_problem(family, dim, seed);
    config.problem_name = family;
  }

  for (const json& sj : j.at("samplers")) {
    std::string name;
    config.samplers.push_back(
        sampler_spec_from_json(sj, config.problem.env.dim, &name));
    config.sampler_names.push_back(name);
  }
  config.n_schedule = j.at("n_schedule").get<std::vector<std::int64_t>>();
  for (std::size_t i = 1; i < config.n_schedule.size(); ++i) {
    if (config.n_schedule[i] <= config.n_schedule[i - 1]) {
      throw std::invalid_argument("bench config: n_schedule must be strictly increasing");
    }
  }
  config.rule = j.contains("rule") ? rule_from_json(j["rule"]) : RadiusRule{};
  if (j.contains("variants")) {
    config.variants.clear();
    for (const json& vj : j["variants"]) {
      config.variants.push_back(plan_variant_from_string(vj.get<std::string>()));
    }
  }
  config.iid_repeats = j.value("iid_repeats", 50);
  if (config.iid_repeats < 1) {
    throw std::invalid_argument("bench config: iid_repeats must be >= 1");
  }
  config.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("oracle")) {
    config.oracle.grid_resolution = j["oracle"].value("grid_resolution", 101);
    if (j["oracle"].contains("deltas")) {
      config.oracle.deltas = j["oracle"]["deltas"].get<std::vector<double>>();
    }
  }
  config.dispersion_resolution = j.value("dispersion_resolution", 0);
  if (j.contains("engine")) {
    const std::string engine = j["engine"].get<std::string>();
    if (engine == "binary_heap") config.plan_options.engine = SearchEngine::kBinaryHeap;
    else if (engine == "bucket") config.plan_options.engine = SearchEngine::kBucket;
    else throw std::invalid_argument("bench config: unknown engine " + engine);
  }
  config.plan_options.strict = j.value("strict", false);
  return config;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open bench config: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return experiment_config_from_json(buffer.str());
}

namespace {

struct Trial {
  std::size_t sampler_idx;
  std::size_t variant_idx;
  std::int64_t n;
  std::uint64_t seed;   // 0 for deterministic samplers
  bool randomized;
};

std::string sanitize_note(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n') c = ';';
  }
  return s;
}

}  // namespace

std::vector<TrialRecord> run_experiment(const ExperimentConfig& config,
                                        int workers) {
  validate_problem(config.problem);
  const int d = config.problem.env.dim;

  // Reference values shared by all trials, computed up front.
  std::vector<std::pair<double, double>> oracle_costs;  // (delta, cost)
  if (!config.oracle.deltas.empty() && !config.problem.env.chain && d <= 4) {
    for (double delta : config.oracle.deltas) {
      oracle_costs.emplace_back(
          delta, oracle_delta_cost(config.problem, delta,
                                   config.oracle.grid_resolution));
    }
    std::sort(oracle_costs.begin(), oracle_costs.end());
  }

  // Dispersion cache for bound_factor: deterministic samplers only.
  std::map<std::pair<std::size_t, std::int64_t>, double> dispersion_hi;
  if (config.dispersion_resolution >= 2 && d <= 3 &&
      config.problem.metric == Metric::kEuclidean) {
    for (std::size_t s = 0; s < config.samplers.size(); ++s) {
      if (sampler_is_randomized(config.samplers[s])) continue;
      for (std::int64_t n : config.n_schedule) {
        const SampleSet set = generate_samples(config.samplers[s],
                                               static_cast<std::size_t>(n));
        dispersion_hi[{s, n}] =
            dispersion_bounds(set, config.dispersion_resolution).hi;
      }
    }
  }

  std::vector<Trial> trials;
  for (std::size_t s = 0; s < config.samplers.size(); ++s) {
    const bool randomized = sampler_is_randomized(config.samplers[s]);
    for (std::size_t v = 0; v < config.variants.size(); ++v) {
      for (std::int64_t n : config.n_schedule) {
        if (randomized) {
          for (int rep = 0; rep < config.iid_repeats; ++rep) {
            trials.push_back({s, v, n, config.seed + rep, true});
          }
        } else {
          trials.push_back({s, v, n, 0, false});
        }
      }
    }
  }

  std::vector<TrialRecord> records(trials.size());
  parallel_chunks(static_cast<std::int64_t>(trials.size()), workers,
                  [&](int, std::int64_t begin, std::int64_t end) {
    for (std::int64_t t = begin; t < end; ++t) {
      const Trial& trial = trials[static_cast<std::size_t>(t)];
      TrialRecord& rec = records[static_cast<std::size_t>(t)];
      rec.sampler = config.sampler_names[trial.sampler_idx];
      rec.variant = to_string(config.variants[trial.variant_idx]);
      rec.seed = trial.seed;
      rec.n = trial.n;
      try {
        SamplerSpec spec = config.samplers[trial.sampler_idx];
        if (trial.randomized) set_seed_recursive(spec, trial.seed);
        PlanOptions opts = config.plan_options;
        opts.variant = config.variants[trial.variant_idx];
        const PlanResult result = plan(config.problem, spec,
                                       static_cast<std::size_t>(trial.n),
                                       config.rule, opts);
        rec.success = result.success ? 1 : 0;
        rec.cost = result.cost;
        rec.n_vertices = result.stats.n_vertices;
        rec.n_edges = result.stats.n_edges;
        rec.n_collision_checks = result.stats.n_collision_checks;
        rec.n_distinct_edge_lengths = result.stats.n_distinct_edge_lengths;

        const double r_n = connection_radius(
            std::max<std::int64_t>(2, trial.n), d, config.rule,
            config.problem.metric);
        const auto disp = dispersion_hi.find({trial.sampler_idx, trial.n});
        if (disp != dispersion_hi.end() && r_n > 2.0 * disp->second) {
          rec.bound_factor = suboptimality_factor(disp->second, r_n);
        }
        for (const auto& [delta, cost] : oracle_costs) {
          if (delta > r_n) {  // Theorem-2 precondition r_n < delta
            rec.oracle_cost_delta = cost;
            break;
          }
        }
      } catch (const std::exception& e) {
        rec.success = 0;
        rec.cost = kInfinity;
        rec.note = sanitize_note(e.what());
      }
    }
  });
  return records;
}

std::string records_to_csv(const std::vector<TrialRecord>& records) {
  std::string out = "# ldplan-bench-csv v1\n";
  out +=
      "sampler,variant,seed,n,success,cost,n_vertices,n_edges,"
      "n_collision_checks,n_distinct_edge_lengths,bound_factor,"
      "oracle_cost_delta,note\n";
  for (const TrialRecord& r : records) {
    out += r.sampler + ',' + r.variant + ',' + std::to_string(r.seed) + ',' +
           std::to_string(r.n) + ',' + std::to_string(r.success) + ',' +
           format_double(r.cost) + ',' + std::to_string(r.n_vertices) + ',' +
           std::to_string(r.n_edges) + ',' +
           std::to_string(r.n_collision_checks) + ',' +
           std::to_string(r.n_distinct_edge_lengths) + ',' +
           format_double(r.bound_factor) + ',' +
           format_double(r.oracle_cost_delta) + ',' + r.note + '\n';
  }
  return out;
}

ExperimentSummary summarize(const std::vector<TrialRecord>& records,
                            const std::vector<std::int64_t>& n_schedule) {
  ExperimentSummary summary;
  if (n_schedule.empty()) return summary;
  summary.high_n = n_schedule.back();
  summary.medium_n = n_schedule.front();
  for (std::int64_t n : n_schedule) {
    if (std::llabs(n - 700) < std::llabs(summary.medium_n - 700)) {
      summary.medium_n = n;
    }
  }

  std::map<std::pair<std::string, std::string>, std::vector<const TrialRecord*>>
      groups;
  for (const TrialRecord& r : records) {
    groups[{r.sampler, r.variant}].push_back(&r);
  }

  for (const auto& [key, rows] : groups) {
    SamplerSummary row;
    row.sampler = key.first;
    row.variant = key.second;

    std::map<std::uint64_t, std::map<std::int64_t, int>> success_by_seed;
    std::map<std::int64_t, std::pair<double, int>> cost_acc;  // sum, count
    for (const TrialRecord* r : rows) {
      success_by_seed[r->seed][r->n] = r->success;
      if (r->success) {
        auto& acc = cost_acc[r->n];
        acc.first += r->cost;
        acc.second += 1;
      }
    }
    row.randomized = success_by_seed.size() > 1;

    // rate-based sustained n@90
    const auto rate = [&](std::int64_t n) {
      int hits = 0;
      int total = 0;
      for (const auto& [seed, by_n] : success_by_seed) {
        const auto it = by_n.find(n);
        if (it != by_n.end()) {
          ++total;
          hits += it->second;
        }
      }
      return total == 0 ? 0.0 : static_cast<double>(hits) / total;
    };
    for (std::size_t i = 0; i < n_schedule.size(); ++i) {
      bool sustained = true;
      for (std::size_t j = i; j < n_schedule.size(); ++j) {
        if (rate(n_schedule[j]) < 0.9) {
          sustained = false;
          break;
        }
      }
      if (sustained) {
        row.n_at_90 = n_schedule[i];
        break;
      }
    }

    // per-seed sustained n, median across seeds
    if (row.randomized) {
      std::vector<std::int64_t> per_seed;
      for (const auto& [seed, by_n] : success_by_seed) {
        std::int64_t first_n = -1;
        for (std::size_t i = 0; i < n_schedule.size(); ++i) {
          bool sustained = true;
          for (std::size_t j = i; j < n_schedule.size(); ++j) {
            const auto it = by_n.find(n_schedule[j]);
            if (it == by_n.end() || it->second == 0) {
              sustained = false;
              break;
            }
          }
          if (sustained) {
            first_n = n_schedule[i];
            break;
          }
        }
        per_seed.push_back(first_n < 0 ? std::numeric_limits<std::int64_t>::max()
                                       : first_n);
      }
      std::sort(per_seed.begin(), per_seed.end());
      const std::int64_t median = per_seed[(per_seed.size() - 1) / 2];
      row.n_at_90_median =
          median == std::numeric_limits<std::int64_t>::max() ? -1 : median;
    } else {
      row.n_at_90_median = row.n_at_90;
    }

    const auto mean_cost = [&](std::int64_t n) {
      const auto it = cost_acc.find(n);
      if (it == cost_acc.end() || it->second.second == 0) {
        return std::numeric_limits<double>::quiet_NaN();
      }
      return it->second.first / it->second.second;
    };
    row.medium_cost = mean_cost(summary.medium_n);
    row.high_cost = mean_cost(summary.high_n);
    summary.rows.push_back(std::move(row));
  }
  return summary;
}

std::string summary_to_csv(const ExperimentSummary& summary) {
  // normalize against the i.i.d. row when present (Table-1 layout)
  const SamplerSummary* iid = nullptr;
  for (const SamplerSummary& row : summary.rows) {
    if (row.randomized) {
      iid = &row;
      break;
    }
  }
  std::string out = "# ldplan-bench-summary v1\n";
  out += "sampler,variant,n_at_90,n_at_90_median,medium_cost,high_cost,"
         "n_at_90_pct_of_iid,medium_cost_pct_of_iid,high_cost_pct_of_iid\n";
  const auto pct = [](double num, double den) {
    if (std::isnan(num) || std::isnan(den) || den <= 0.0) {
      return std::numeric_limits<double>::quiet_NaN();
    }
    return 100.0 * num / den;
  };
  for (const SamplerSummary& row : summary.rows) {
    out += row.sampler + ',' + row.variant + ',' +
           std::to_string(row.n_at_90) + ',' +
           std::to_string(row.n_at_90_median) + ',' +
           format_double(row.medium_cost) + ',' + format_double(row.high_cost);
    if (iid != nullptr && &row != iid) {
      out += ',' +
             format_double(pct(static_cast<double>(row.n_at_90),
                               static_cast<double>(iid->n_at_90))) +
             ',' + format_double(pct(row.medium_cost, iid->medium_cost)) +
             ',' + format_double(pct(row.high_cost, iid->high_cost));
    } else {
      out += ",nan,nan,nan";
    }
    out += '\n';
  }
  return out;
}

std::vector<ComplexityRecord> complexity_scan(
    const Problem& problem, const SamplerSpec& sampler, const RadiusRule& rule,
    const std::vector<std::int64_t>& n_schedule, int workers) {
  std::vector<ComplexityRecord> out;
  const int d = problem.env.dim;
  for (std::int64_t n : n_schedule) {
    const SampleSet samples =
        generate_samples(sampler, static_cast<std::size_t>(n));
    const std::int64_t m = static_cast<std::int64_t>(samples.size());
    const double r = connection_radius(m, d, rule, problem.metric);

    RoadmapOptions opts;
    opts.add_init_vertex = false;
    opts.add_goal_vertex = false;
    opts.workers = workers;
    const Roadmap rm = build_roadmap(samples, problem, r, opts);

    ComplexityRecord rec;
    rec.n = rm.stats.n_vertices;
    rec.radius = r;
    rec.edges = rm.stats.n_edges;
    rec.distinct_lengths = rm.stats.n_distinct_edge_lengths;
    const double n_d = static_cast<double>(rec.n);
    const double r_d = std::pow(r, d);
    rec.edges_ratio = static_cast<double>(rec.edges) / (n_d * n_d * r_d);
    rec.distinct_ratio = static_cast<double>(rec.distinct_lengths) / (n_d * r_d);
    out.push_back(rec);
  }
  return out;
}

std::string complexity_to_csv(const std::vector<ComplexityRecord>& records) {
  std::string out = "# ldplan-complexity-csv v1\n";
  out += "n,radius,edges,edges_ratio,distinct_lengths,distinct_ratio\n";
  for (const ComplexityRecord& r : records) {
    out += std::to_string(r.n) + ',' + format_double(r.radius) + ',' +
           std::to_string(r.edges) + ',' + format_double(r.edges_ratio) + ',' +
           std::to_string(r.distinct_lengths) + ',' +
           format_double(r.distinct_ratio) + '\n';
  }
  return out;
}

}  // namespace ldplan
