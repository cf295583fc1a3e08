#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "ldplan/plan.hpp"
#include "ldplan/problem.hpp"

namespace ldplan {

struct OracleConfig {
  int grid_resolution = 101;
  std::vector<double> deltas;  // clearances for c^(delta) reference costs
};

/// One experiment: a problem, a set of samplers, and an n schedule.
/// Mirrors the JSON config surface (see README).
struct ExperimentConfig {
  Problem problem;
  std::string problem_name = "problem";
  std::vector<SamplerSpec> samplers;
  std::vector<std::string> sampler_names;
  std::vector<std::int64_t> n_schedule;
  RadiusRule rule;
  std::vector<PlanVariant> variants = {PlanVariant::kGprm};
  int iid_repeats = 50;
  std::uint64_t seed = 0;  // base seed for randomized samplers
  OracleConfig oracle;
  PlanOptions plan_options;
  /// Dispersion estimator resolution for bound_factor columns (0 = skip).
  int dispersion_resolution = 0;
};

ExperimentConfig experiment_config_from_json(const std::string& text);
ExperimentConfig load_experiment_config(const std::string& path);

/// One CSV row. Wall-clock fields are deliberately excluded so reruns are
/// byte-identical.
struct TrialRecord {
  std::string sampler;
  std::string variant;
  std::uint64_t seed = 0;  // 0 for deterministic samplers
  std::int64_t n = 0;
  int success = 0;
  double cost = kInfinity;
  std::int64_t n_vertices = 0;
  std::int64_t n_edges = 0;
  std::int64_t n_collision_checks = 0;
  std::int64_t n_distinct_edge_lengths = 0;
  double bound_factor = std::numeric_limits<double>::quiet_NaN();
  double oracle_cost_delta = std::numeric_limits<double>::quiet_NaN();
  std::string note;  // error note for trials that threw
};

/// Runs every (sampler x variant x n x seed) trial. Trials execute
/// concurrently up to `workers`; records come back sorted by
/// (sampler, variant, n, seed) so output order is deterministic.
/// A trial that throws is recorded as a failed trial with a note.
std::vector<TrialRecord> run_experiment(const ExperimentConfig& config,
                                        int workers = 0);

/// Fixed, versioned CSV layout (first line "# ldplan-bench-csv v1").
std::string records_to_csv(const std::vector<TrialRecord>& records);

struct SamplerSummary {
  std::string sampler;
  std::string variant;
  bool randomized = false;
  std::int64_t n_at_90 = -1;          // sustained >=90% success (rate-based)
  std::int64_t n_at_90_median = -1;   // median over seeds of per-seed n@90
  double medium_cost = std::numeric_limits<double>::quiet_NaN();
  double high_cost = std::numeric_limits<double>::quiet_NaN();
};

struct ExperimentSummary {
  std::vector<SamplerSummary> rows;
  std::int64_t medium_n = 0;  // schedule point nearest 700
  std::int64_t high_n = 0;    // schedule maximum
};

/// Pure function of the records: success/cost summaries per sampler.
ExperimentSummary summarize(const std::vector<TrialRecord>& records,
                            const std::vector<std::int64_t>& n_schedule);

/// Table-style normalization: each deterministic entry divided by the
/// i.i.d. row, as percentages. Returns a small CSV.
std::string summary_to_csv(const ExperimentSummary& summary);

struct ComplexityRecord {
  std::int64_t n = 0;  // vertex count used
  double radius = 0.0;
  std::int64_t edges = 0;
  double edges_ratio = 0.0;            // edges / (n^2 r^d)
  std::int64_t distinct_lengths = 0;
  double distinct_ratio = 0.0;         // distinct / (n r^d)
};

/// Builds sample-only roadmaps (no injected endpoints) across the schedule
/// and reports the Theorem-3 normalizations. No assertions here; the
/// acceptance suite owns the thresholds.
std::vector<ComplexityRecord> complexity_scan(
    const Problem& problem, const SamplerSpec& sampler, const RadiusRule& rule,
    const std::vector<std::int64_t>& n_schedule, int workers = 0);

std::string complexity_to_csv(const std::vector<ComplexityRecord>& records);

/// 17-significant-digit formatting shared by every CSV emitter.
std::string format_double(double v);

}  // namespace ldplan
