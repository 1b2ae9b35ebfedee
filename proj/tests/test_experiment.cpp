#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "drapsim/experiment.hpp"

using namespace drapsim;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int line_count(const std::string& s) {
  int n = 0;
  for (char c : s) n += (c == '\n');
  return n;
}

fs::path fresh_dir(const char* name) {
  fs::path d = fs::temp_directory_path() / name;
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("fit_power_law recovers slope -1 exactly") {
  const PowerLawFit fit =
      fit_power_law({{1.0, 1.0}, {2.0, 0.5}, {4.0, 0.25}});
  CHECK(fit.exponent == doctest::Approx(-1.0));
  CHECK(fit.coefficient == doctest::Approx(1.0));
  CHECK(fit.r_squared == doctest::Approx(1.0));
}

TEST_CASE("fit_power_law on constant data is flat") {
  const PowerLawFit fit = fit_power_law({{1.0, 3.0}, {10.0, 3.0}, {100.0, 3.0}});
  CHECK(fit.exponent == doctest::Approx(0.0));
  CHECK(fit.coefficient == doctest::Approx(3.0));
}

TEST_CASE("fit_power_law recovers an arbitrary exact power law") {
  std::vector<std::pair<double, double>> pts;
  for (double x : {2.0, 5.0, 11.0, 40.0, 300.0}) {
    pts.emplace_back(x, 4.5 * std::pow(x, -0.83));
  }
  const PowerLawFit fit = fit_power_law(pts);
  CHECK(fit.exponent == doctest::Approx(-0.83).epsilon(1e-10));
  CHECK(fit.coefficient == doctest::Approx(4.5).epsilon(1e-10));
  CHECK(fit.r_squared == doctest::Approx(1.0));
}

TEST_CASE("fit_power_law input validation") {
  CHECK_THROWS_AS(fit_power_law({{1.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(fit_power_law({{1.0, 1.0}, {2.0, -1.0}}), std::domain_error);
  CHECK_THROWS_AS(fit_power_law({{0.0, 1.0}, {2.0, 1.0}}), std::domain_error);
}

TEST_CASE("auto radius scales inversely with sqrt(nodes)") {
  ExperimentConfig cfg;
  CHECK(resolve_radius(cfg, 100) == doctest::Approx(kBaselineRadius));
  CHECK(resolve_radius(cfg, 400) == doctest::Approx(kBaselineRadius / 2.0));
  CHECK(resolve_radius(cfg, 25) == doctest::Approx(kBaselineRadius * 2.0));
  cfg.radius = 0.3;
  CHECK(resolve_radius(cfg, 400) == doctest::Approx(0.3));
}

TEST_CASE("paired trials share workloads across schedulers") {
  ExperimentConfig cfg;
  cfg.nodes = 20;
  cfg.tasks = 30;
  cfg.trials = 2;
  cfg.base_seed = 7;
  auto drap = run_trials(cfg);
  cfg.scheduler = "fifo";
  auto fifo = run_trials(cfg);
  REQUIRE(drap.size() == 2);
  REQUIRE(fifo.size() == 2);
  for (int i = 0; i < 2; ++i) {
    CHECK(drap[static_cast<std::size_t>(i)].summary.seed ==
          fifo[static_cast<std::size_t>(i)].summary.seed);
    CHECK(!drap[static_cast<std::size_t>(i)].summary.incomplete);
    CHECK(!fifo[static_cast<std::size_t>(i)].summary.incomplete);
  }
}

TEST_CASE("run_experiment writes the expected csv shapes") {
  const fs::path dir = fresh_dir("drapsim_exp_shape");
  ExperimentConfig cfg;
  cfg.nodes = 20;
  cfg.tasks = 25;
  cfg.trials = 3;
  cfg.base_seed = 11;
  cfg.out_dir = dir.string();
  CHECK(run_experiment(cfg) == 0);

  const std::string summary = slurp(dir / "summary.csv");
  CHECK(line_count(summary) == 1 + 3 + 1);  // header, trials, aggregate
  CHECK(summary.rfind("trial,scheduler,nodes,tasks,seed,", 0) == 0);
  CHECK(summary.find("\naggregate,") != std::string::npos);

  const std::string series = slurp(dir / "timeseries.csv");
  CHECK(series.rfind("tick,busy_nodes,utilization,traversals,queue_length", 0)
        == 0);
  CHECK(line_count(series) > 2);
}

TEST_CASE("run_experiment with one trial omits the aggregate row") {
  const fs::path dir = fresh_dir("drapsim_exp_single");
  ExperimentConfig cfg;
  cfg.nodes = 15;
  cfg.tasks = 10;
  cfg.trials = 1;
  cfg.out_dir = dir.string();
  CHECK(run_experiment(cfg) == 0);
  const std::string summary = slurp(dir / "summary.csv");
  CHECK(line_count(summary) == 2);
  CHECK(summary.find("aggregate") == std::string::npos);
}

TEST_CASE("run_experiment output is byte-identical across reruns") {
  const fs::path d1 = fresh_dir("drapsim_exp_rerun1");
  const fs::path d2 = fresh_dir("drapsim_exp_rerun2");
  ExperimentConfig cfg;
  cfg.nodes = 18;
  cfg.tasks = 20;
  cfg.trials = 2;
  cfg.base_seed = 99;
  cfg.out_dir = d1.string();
  REQUIRE(run_experiment(cfg) == 0);
  cfg.out_dir = d2.string();
  REQUIRE(run_experiment(cfg) == 0);
  CHECK(slurp(d1 / "summary.csv") == slurp(d2 / "summary.csv"));
  CHECK(slurp(d1 / "timeseries.csv") == slurp(d2 / "timeseries.csv"));
}

TEST_CASE("run_experiment reports an incomplete run via exit code 2") {
  const fs::path dir = fresh_dir("drapsim_exp_budget");
  ExperimentConfig cfg;
  cfg.nodes = 10;
  cfg.tasks = 50;
  cfg.trials = 1;
  cfg.max_ticks = 5;
  cfg.out_dir = dir.string();
  CHECK(run_experiment(cfg) == 2);
}

TEST_CASE("sweep over two sizes produces per-size rows and a fit") {
  const fs::path dir = fresh_dir("drapsim_sweep");
  ExperimentConfig cfg;
  cfg.tasks = 40;
  cfg.trials = 2;
  cfg.base_seed = 5;
  cfg.out_dir = dir.string();
  const std::vector<int> sizes{20, 40};
  const SweepResult res = sweep_nodes(cfg, sizes);
  REQUIRE(res.points.size() == 2);
  CHECK(res.points[0].nodes == 20);
  CHECK(res.points[1].nodes == 40);
  CHECK(res.points[0].radius > res.points[1].radius);
  REQUIRE(res.t_complete_fit.has_value());
  // more nodes finish the same workload sooner
  CHECK(res.points[1].stats.t_complete.mean <
        res.points[0].stats.t_complete.mean);

  CHECK(run_sweep(cfg, sizes) == 0);
  CHECK(slurp(dir / "sweep.csv").rfind("nodes,", 0) == 0);
  CHECK(line_count(slurp(dir / "sweep.csv")) == 3);
  CHECK(line_count(slurp(dir / "fit.csv")) >= 2);
}
