// drapsim: decentralized task-allocation simulator and experiment harness.
//
// Subcommands:
//   run          multi-trial experiment -> summary.csv + timeseries.csv
//   sweep        node-count sweep       -> sweep.csv + fit.csv
//   scaling-law  two-level queue cost model -> scaling_law.csv

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "drapsim/experiment.hpp"
#include "drapsim/lymph.hpp"

namespace {

struct CommonOpts {
  drapsim::ExperimentConfig cfg;
  std::string radius = "auto";
  std::string workload = "normal";
  std::string ordering = "shuffled";
  bool no_early_exit = false;
};

void add_common_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--scheduler", o.cfg.scheduler, "Scheduling policy")
      ->check(CLI::IsMember({"drap", "fifo"}))
      ->capture_default_str();
  cmd->add_option("--nodes", o.cfg.nodes, "Number of agents")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--tasks", o.cfg.tasks, "Number of tasks")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--trials", o.cfg.trials, "Independent trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--seed", o.cfg.base_seed, "Base seed; trial i uses seed+i")
      ->capture_default_str();
  cmd->add_option("--radius", o.radius,
                  "Neighbor radius, or 'auto' (0.30*sqrt(100/nodes))")
      ->capture_default_str();
  cmd->add_option("--persistence", o.cfg.drap.cluster_persistence,
                  "Ticks an empty cluster survives before dissociating")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--starvation", o.cfg.drap.starvation_timeout,
                  "Ticks before an under-staffed task returns to the queue")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_flag("--no-early-exit", o.no_early_exit,
                "Always scan the full queue (no stop at exact fit)");
  cmd->add_option("--workload", o.workload, "cpu_req distribution")
      ->check(CLI::IsMember({"normal", "uniform"}))
      ->capture_default_str();
  cmd->add_option("--ordering", o.ordering, "Initial queue ordering")
      ->check(CLI::IsMember({"shuffled", "adversarial-desc", "adversarial-asc"}))
      ->capture_default_str();
  cmd->add_option("--time-per-cpu", o.cfg.workload.time_per_cpu,
                  "time_total = time_per_cpu * cpu_req")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--cpu-min", o.cfg.workload.cpu_min, "Smallest cpu_req")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--cpu-max", o.cfg.workload.cpu_max, "Largest cpu_req")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--sigma", o.cfg.workload.sigma,
                  "Stddev of the discretized normal draw")
      ->capture_default_str();
  cmd->add_option("--max-ticks", o.cfg.max_ticks, "Tick budget per run")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--out", o.cfg.out_dir, "Output directory")
      ->capture_default_str();
  cmd->set_config("--config", "", "Flat key=value config file; flags win");
}

drapsim::ExperimentConfig finalize(CommonOpts& o) {
  if (o.radius != "auto") o.cfg.radius = std::stod(o.radius);
  o.cfg.workload.distribution = drapsim::parse_distribution(o.workload);
  o.cfg.workload.ordering = drapsim::parse_ordering(o.ordering);
  o.cfg.drap.early_exit_on_exact_fit = !o.no_early_exit;
  return o.cfg;
}

int run_scaling_law(double alpha, double beta, double gamma,
                    const std::vector<double>& big_ns, long n_max,
                    const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  const std::string path = out_dir + "/scaling_law.csv";
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "cannot open for writing: " << path << "\n";
    return 1;
  }
  out << "N,optimal_n,brute_force_n,cost\n";
  for (double N : big_ns) {
    drapsim::CostParams p;
    p.alpha = alpha;
    p.beta = beta;
    p.gamma = gamma;
    p.big_n = N;
    const double opt = drapsim::optimal_n(p);
    const long brute = drapsim::brute_force_optimal_n(p, n_max);
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%.6g,%.6f,%ld,%.6f", N, opt, brute,
                  drapsim::total_cost(opt, p));
    out << buf << "\n";
  }
  std::cout << "wrote " << path << " (regime: "
            << drapsim::to_string(drapsim::classify_scaling(alpha, beta, gamma))
            << ", exponent " << drapsim::scaling_exponent(alpha, beta, gamma)
            << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dRAP decentralized task-allocation simulator"};
  app.require_subcommand(1);

  CommonOpts run_opts;
  CLI::App* run_cmd = app.add_subcommand("run", "Multi-trial experiment");
  add_common_flags(run_cmd, run_opts);

  CommonOpts sweep_opts;
  std::vector<int> sweep_counts{50, 100, 150, 200, 250, 300};
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Node-count sweep");
  add_common_flags(sweep_cmd, sweep_opts);
  sweep_cmd->add_option("--sweep", sweep_counts, "Node counts, e.g. 50,100,150")
      ->delimiter(',')
      ->capture_default_str();

  double alpha = 2.0, beta = 1.0, gamma = 1.0;
  std::vector<double> big_ns{10, 100, 1000, 10000, 100000, 1000000};
  long n_max = 10000;
  std::string scaling_out = ".";
  CLI::App* scaling_cmd =
      app.add_subcommand("scaling-law", "Two-level queue cost model");
  scaling_cmd->add_option("--alpha", alpha, "Local cost exponent")
      ->capture_default_str();
  scaling_cmd->add_option("--beta", beta, "Global denominator exponent")
      ->capture_default_str();
  scaling_cmd->add_option("--gamma", gamma, "Global numerator exponent")
      ->capture_default_str();
  scaling_cmd->add_option("--N", big_ns, "Total cluster counts")
      ->delimiter(',')
      ->capture_default_str();
  scaling_cmd->add_option("--n-max", n_max, "Brute-force search bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  scaling_cmd->add_option("--out", scaling_out, "Output directory")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);  // prints help or the usage error
    return rc == 0 ? 0 : 1;
  }

  try {
    if (run_cmd->parsed()) {
      const int rc = drapsim::run_experiment(finalize(run_opts));
      if (rc == 2) std::cerr << "warning: incomplete runs (max_ticks hit)\n";
      return rc;
    }
    if (sweep_cmd->parsed()) {
      const drapsim::ExperimentConfig cfg = finalize(sweep_opts);
      if (sweep_counts.size() < 2) {
        std::cerr << "note: single sweep point, power-law fit skipped\n";
      }
      const int rc = drapsim::run_sweep(cfg, sweep_counts);
      if (rc == 2) std::cerr << "warning: incomplete runs (max_ticks hit)\n";
      return rc;
    }
    return run_scaling_law(alpha, beta, gamma, big_ns, n_max, scaling_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
