#include "drapsim/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <stdexcept>

#include "drapsim/fifo.hpp"

namespace drapsim {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

}  // namespace

double resolve_radius(const ExperimentConfig& cfg, int nodes) {
  if (cfg.radius) return *cfg.radius;
  return kBaselineRadius * std::sqrt(100.0 / static_cast<double>(nodes));
}

TrialResult run_trial(const ExperimentConfig& cfg, int trial_index) {
  if (cfg.trials < 1 || cfg.nodes < 1) {
    throw std::invalid_argument("config requires trials >= 1 and nodes >= 1");
  }
  const std::uint64_t seed = cfg.base_seed + static_cast<std::uint64_t>(trial_index);

  WorkloadSpec ws = cfg.workload;
  ws.count = cfg.tasks;
  ws.seed = mix_seed(seed, 1);
  std::vector<Task> tasks = generate(ws);

  World world = World::init(cfg.nodes, std::move(tasks),
                            resolve_radius(cfg, cfg.nodes), mix_seed(seed, 2));

  std::unique_ptr<SchedulerPolicy> policy;
  if (cfg.scheduler == "drap") {
    policy = std::make_unique<DrapPolicy>(cfg.drap);
  } else if (cfg.scheduler == "fifo") {
    init_fixed_clusters(world, cfg.workload.cpu_max, mix_seed(seed, 3));
    policy = std::make_unique<FifoPolicy>();
  } else {
    throw std::invalid_argument("unknown scheduler: " + cfg.scheduler);
  }

  auto [series, summary] = world.run_to_completion(*policy, cfg.max_ticks);
  summary.scheduler = cfg.scheduler;
  summary.seed = seed;
  return TrialResult{std::move(summary), std::move(series)};
}

std::vector<TrialResult> run_trials(const ExperimentConfig& cfg) {
  std::vector<TrialResult> results;
  results.reserve(static_cast<std::size_t>(cfg.trials));
  for (int i = 0; i < cfg.trials; ++i) results.push_back(run_trial(cfg, i));
  return results;
}

AggregateRow aggregate(const std::vector<TrialResult>& trials) {
  std::vector<double> tc, tw, mu;
  AggregateRow agg;
  for (const TrialResult& t : trials) {
    tc.push_back(static_cast<double>(t.summary.t_complete));
    tw.push_back(t.summary.t_wait);
    mu.push_back(t.summary.mu_mean);
    agg.any_incomplete = agg.any_incomplete || t.summary.incomplete;
  }
  agg.t_complete = confidence_interval(tc);
  agg.t_wait = confidence_interval(tw);
  agg.mu_mean = confidence_interval(mu);
  return agg;
}

void write_summary_csv(const std::string& path,
                       const std::vector<TrialResult>& trials,
                       const std::optional<AggregateRow>& agg) {
  std::ofstream out = open_out(path);
  out << "trial,scheduler,nodes,tasks,seed,t_complete,t_wait,mu_mean,incomplete,"
         "t_complete_ci_lo,t_complete_ci_hi,t_wait_ci_lo,t_wait_ci_hi,"
         "mu_mean_ci_lo,mu_mean_ci_hi\n";
  for (std::size_t i = 0; i < trials.size(); ++i) {
    const RunSummary& s = trials[i].summary;
    out << i << ',' << s.scheduler << ',' << s.nodes << ',' << s.tasks << ','
        << s.seed << ',' << s.t_complete << ',' << fmt_double(s.t_wait) << ','
        << fmt_double(s.mu_mean) << ',' << (s.incomplete ? 1 : 0)
        << ",,,,,,\n";
  }
  if (agg) {
    const RunSummary& s0 = trials.front().summary;
    out << "aggregate," << s0.scheduler << ',' << s0.nodes << ',' << s0.tasks
        << ",," << fmt_double(agg->t_complete.mean) << ','
        << fmt_double(agg->t_wait.mean) << ',' << fmt_double(agg->mu_mean.mean)
        << ',' << (agg->any_incomplete ? 1 : 0) << ','
        << fmt_double(agg->t_complete.lo) << ',' << fmt_double(agg->t_complete.hi)
        << ',' << fmt_double(agg->t_wait.lo) << ',' << fmt_double(agg->t_wait.hi)
        << ',' << fmt_double(agg->mu_mean.lo) << ','
        << fmt_double(agg->mu_mean.hi) << "\n";
  }
}

void write_timeseries_csv(const std::string& path, const Timeseries& series) {
  std::ofstream out = open_out(path);
  out << "tick,busy_nodes,utilization,traversals,queue_length\n";
  for (const TickSample& s : series) {
    out << s.tick << ',' << s.busy_nodes << ',' << fmt_double(s.utilization)
        << ',' << s.traversals << ',' << s.queue_length << "\n";
  }
}

int run_experiment(const ExperimentConfig& cfg) {
  std::filesystem::create_directories(cfg.out_dir);
  const std::vector<TrialResult> trials = run_trials(cfg);
  std::optional<AggregateRow> agg;
  if (cfg.trials >= 2) agg = aggregate(trials);
  write_summary_csv(cfg.out_dir + "/summary.csv", trials, agg);
  write_timeseries_csv(cfg.out_dir + "/timeseries.csv", trials.front().series);
  for (const TrialResult& t : trials) {
    if (t.summary.incomplete) return 2;
  }
  return 0;
}

PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) {
    throw std::invalid_argument("fit_power_law needs at least 2 points");
  }
  const double n = static_cast<double>(points.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0)) {
      throw std::domain_error("fit_power_law requires positive values");
    }
    const double lx = std::log2(x);
    const double ly = std::log2(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    syy += ly * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) {
    throw std::domain_error("fit_power_law requires at least 2 distinct x values");
  }
  PowerLawFit fit;
  fit.exponent = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - fit.exponent * sx) / n;
  fit.coefficient = std::exp2(intercept);
  const double ss_tot = syy - sy * sy / n;
  double ss_res = 0.0;
  for (const auto& [x, y] : points) {
    const double pred = intercept + fit.exponent * std::log2(x);
    const double resid = std::log2(y) - pred;
    ss_res += resid * resid;
  }
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

SweepResult sweep_nodes(const ExperimentConfig& cfg,
                        const std::vector<int>& node_counts) {
  if (node_counts.empty()) {
    throw std::invalid_argument("sweep requires at least one node count");
  }
  SweepResult result;
  for (int n : node_counts) {
    if (n < 1) throw std::invalid_argument("node counts must be >= 1");
    ExperimentConfig point_cfg = cfg;
    point_cfg.nodes = n;
    const std::vector<TrialResult> trials = run_trials(point_cfg);
    SweepPoint point;
    point.nodes = n;
    point.radius = resolve_radius(cfg, n);
    point.stats = trials.size() >= 2
                      ? aggregate(trials)
                      : AggregateRow{Ci{static_cast<double>(
                                            trials[0].summary.t_complete),
                                        0, 0},
                                     Ci{trials[0].summary.t_wait, 0, 0},
                                     Ci{trials[0].summary.mu_mean, 0, 0},
                                     trials[0].summary.incomplete};
    result.points.push_back(point);
  }
  if (result.points.size() >= 2) {
    std::vector<std::pair<double, double>> tc, tw;
    for (const SweepPoint& p : result.points) {
      tc.emplace_back(p.nodes, p.stats.t_complete.mean);
      tw.emplace_back(p.nodes, p.stats.t_wait.mean);
    }
    result.t_complete_fit = fit_power_law(tc);
    result.t_wait_fit = fit_power_law(tw);
  }
  return result;
}

void write_sweep_csv(const std::string& path, const SweepResult& sweep) {
  std::ofstream out = open_out(path);
  out << "nodes,radius,t_complete_mean,t_complete_ci_lo,t_complete_ci_hi,"
         "t_wait_mean,t_wait_ci_lo,t_wait_ci_hi\n";
  for (const SweepPoint& p : sweep.points) {
    out << p.nodes << ',' << fmt_double(p.radius) << ','
        << fmt_double(p.stats.t_complete.mean) << ','
        << fmt_double(p.stats.t_complete.lo) << ','
        << fmt_double(p.stats.t_complete.hi) << ','
        << fmt_double(p.stats.t_wait.mean) << ','
        << fmt_double(p.stats.t_wait.lo) << ','
        << fmt_double(p.stats.t_wait.hi) << "\n";
  }
}

void write_fit_csv(const std::string& path, const SweepResult& sweep) {
  std::ofstream out = open_out(path);
  out << "metric,exponent,coefficient,r_squared\n";
  if (sweep.t_complete_fit) {
    out << "t_complete," << fmt_double(sweep.t_complete_fit->exponent) << ','
        << fmt_double(sweep.t_complete_fit->coefficient) << ','
        << fmt_double(sweep.t_complete_fit->r_squared) << "\n";
  }
  if (sweep.t_wait_fit) {
    out << "t_wait," << fmt_double(sweep.t_wait_fit->exponent) << ','
        << fmt_double(sweep.t_wait_fit->coefficient) << ','
        << fmt_double(sweep.t_wait_fit->r_squared) << "\n";
  }
}

int run_sweep(const ExperimentConfig& cfg, const std::vector<int>& node_counts) {
  std::filesystem::create_directories(cfg.out_dir);
  const SweepResult sweep = sweep_nodes(cfg, node_counts);
  write_sweep_csv(cfg.out_dir + "/sweep.csv", sweep);
  write_fit_csv(cfg.out_dir + "/fit.csv", sweep);
  for (const SweepPoint& p : sweep.points) {
    if (p.stats.any_incomplete) return 2;
  }
  return 0;
}

}  // namespace drapsim
