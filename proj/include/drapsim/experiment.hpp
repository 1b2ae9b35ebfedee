#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drapsim/drap.hpp"
#include "drapsim/metrics.hpp"
#include "drapsim/workload.hpp"

namespace drapsim {

// 100-node baseline for the "auto" radius; roughly 25-28 expected neighbors
// per node under uniform placement. Large enough that recruiting rarely
// starves, which is what keeps steady-state utilization in the 90% range.
inline constexpr double kBaselineRadius = 0.30;

struct ExperimentConfig {
  std::string scheduler = "drap";  // "drap" | "fifo"
  int nodes = 100;
  int tasks = 1000;
  int trials = 10;
  std::uint64_t base_seed = 1;
  std::optional<double> radius;  // nullopt = auto: kBaselineRadius*sqrt(100/nodes)
  WorkloadSpec workload;         // count and seed are filled per trial
  DrapConfig drap;
  long max_ticks = 1'000'000;
  std::string out_dir = ".";
};

double resolve_radius(const ExperimentConfig& cfg, int nodes);

struct TrialResult {
  RunSummary summary;
  Timeseries series;
};

// One fully deterministic run: trial i uses seed base_seed + i for the
// workload, placement and tick permutations.
TrialResult run_trial(const ExperimentConfig& cfg, int trial_index);

std::vector<TrialResult> run_trials(const ExperimentConfig& cfg);

struct AggregateRow {
  Ci t_complete;
  Ci t_wait;
  Ci mu_mean;
  bool any_incomplete = false;
};

AggregateRow aggregate(const std::vector<TrialResult>& trials);

// Writes summary.csv (one row per trial plus, for trials >= 2, an aggregate
// row with 95% CIs) and timeseries.csv (first trial). Returns 0 on success,
// 2 when any run was incomplete.
int run_experiment(const ExperimentConfig& cfg);

struct PowerLawFit {
  double exponent = 0.0;
  double coefficient = 0.0;
  double r_squared = 0.0;
};

// Least squares on (log2 x, log2 y); exponent = slope, coefficient =
// 2^intercept. Throws std::domain_error on non-positive values and
// std::invalid_argument with fewer than 2 points.
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points);

struct SweepPoint {
  int nodes = 0;
  double radius = 0.0;
  AggregateRow stats;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  std::optional<PowerLawFit> t_complete_fit;  // unset for single-point sweeps
  std::optional<PowerLawFit> t_wait_fit;
};

SweepResult sweep_nodes(const ExperimentConfig& cfg,
                        const std::vector<int>& node_counts);

// Writes sweep.csv and fit.csv. Returns 0 on success, 2 on incomplete runs.
int run_sweep(const ExperimentConfig& cfg, const std::vector<int>& node_counts);

// CSV emission (plain header + rows; byte-stable for fixed inputs).
void write_summary_csv(const std::string& path,
                       const std::vector<TrialResult>& trials,
                       const std::optional<AggregateRow>& agg);
void write_timeseries_csv(const std::string& path, const Timeseries& series);
void write_sweep_csv(const std::string& path, const SweepResult& sweep);
void write_fit_csv(const std::string& path, const SweepResult& sweep);

}  // namespace drapsim
