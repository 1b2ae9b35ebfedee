#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "drapsim/experiment.hpp"
#include "drapsim/lymph.hpp"
#include "drapsim/metrics.hpp"
#include "drapsim/workload.hpp"

namespace py = pybind11;
using namespace drapsim;

PYBIND11_MODULE(drapsim, m) {
  m.doc() = "Decentralized task-allocation simulator (dRAP vs FIFO)";

  py::class_<WorkloadSpec>(m, "WorkloadSpec")
      .def(py::init<>())
      .def_readwrite("count", &WorkloadSpec::count)
      .def_readwrite("time_per_cpu", &WorkloadSpec::time_per_cpu)
      .def_readwrite("cpu_min", &WorkloadSpec::cpu_min)
      .def_readwrite("cpu_max", &WorkloadSpec::cpu_max)
      .def_readwrite("sigma", &WorkloadSpec::sigma)
      .def_readwrite("seed", &WorkloadSpec::seed)
      .def_property(
          "distribution",
          [](const WorkloadSpec& s) {
            return s.distribution == Distribution::normal ? "normal" : "uniform";
          },
          [](WorkloadSpec& s, const std::string& v) {
            s.distribution = parse_distribution(v);
          })
      .def_property(
          "ordering",
          [](const WorkloadSpec& s) {
            switch (s.ordering) {
              case Ordering::shuffled: return "shuffled";
              case Ordering::adversarial_desc: return "adversarial-desc";
              default: return "adversarial-asc";
            }
          },
          [](WorkloadSpec& s, const std::string& v) {
            s.ordering = parse_ordering(v);
          });

  py::class_<DrapConfig>(m, "DrapConfig")
      .def(py::init<>())
      .def_readwrite("cluster_persistence", &DrapConfig::cluster_persistence)
      .def_readwrite("starvation_timeout", &DrapConfig::starvation_timeout)
      .def_readwrite("early_exit_on_exact_fit",
                     &DrapConfig::early_exit_on_exact_fit);

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("scheduler", &ExperimentConfig::scheduler)
      .def_readwrite("nodes", &ExperimentConfig::nodes)
      .def_readwrite("tasks", &ExperimentConfig::tasks)
      .def_readwrite("trials", &ExperimentConfig::trials)
      .def_readwrite("base_seed", &ExperimentConfig::base_seed)
      .def_readwrite("radius", &ExperimentConfig::radius)
      .def_readwrite("workload", &ExperimentConfig::workload)
      .def_readwrite("drap", &ExperimentConfig::drap)
      .def_readwrite("max_ticks", &ExperimentConfig::max_ticks)
      .def_readwrite("out_dir", &ExperimentConfig::out_dir);

  m.def("generate_workload", [](const WorkloadSpec& spec) {
    py::list out;
    for (const Task& t : generate(spec)) {
      py::dict d;
      d["id"] = t.id;
      d["cpu_req"] = t.cpu_req;
      d["time_total"] = t.time_total;
      out.append(d);
    }
    return out;
  });

  m.def(
      "run_trial",
      [](const ExperimentConfig& cfg, int trial_index) {
        const TrialResult r = run_trial(cfg, trial_index);
        py::dict d;
        d["t_complete"] = r.summary.t_complete;
        d["t_wait"] = r.summary.t_wait;
        d["mu_mean"] = r.summary.mu_mean;
        d["incomplete"] = r.summary.incomplete;
        d["seed"] = r.summary.seed;
        d["scheduler"] = r.summary.scheduler;
        py::list util, traversals, queue_len;
        for (const TickSample& s : r.series) {
          util.append(s.utilization);
          traversals.append(s.traversals);
          queue_len.append(s.queue_length);
        }
        d["utilization"] = util;
        d["traversals"] = traversals;
        d["queue_length"] = queue_len;
        return d;
      },
      py::arg("config"), py::arg("trial_index") = 0);

  m.def("run_experiment", &run_experiment,
        "Run trials and write summary.csv/timeseries.csv; returns exit status");

  m.def(
      "sweep_nodes",
      [](const ExperimentConfig& cfg, const std::vector<int>& counts) {
        const SweepResult s = sweep_nodes(cfg, counts);
        py::dict d;
        py::list pts;
        for (const SweepPoint& p : s.points) {
          py::dict pd;
          pd["nodes"] = p.nodes;
          pd["radius"] = p.radius;
          pd["t_complete_mean"] = p.stats.t_complete.mean;
          pd["t_wait_mean"] = p.stats.t_wait.mean;
          pts.append(pd);
        }
        d["points"] = pts;
        if (s.t_complete_fit) {
          d["t_complete_exponent"] = s.t_complete_fit->exponent;
          d["t_wait_exponent"] = s.t_wait_fit->exponent;
        }
        return d;
      },
      py::arg("config"), py::arg("node_counts"));

  m.def("fit_power_law", [](const std::vector<std::pair<double, double>>& pts) {
    const PowerLawFit f = fit_power_law(pts);
    return py::make_tuple(f.exponent, f.coefficient, f.r_squared);
  });

  m.def("mu_cluster", &mu_cluster, py::arg("cpu_req"), py::arg("cpu_cluster"));
  m.def(
      "confidence_interval",
      [](const std::vector<double>& samples, double level) {
        const Ci ci = confidence_interval(samples, level);
        return py::make_tuple(ci.mean, ci.lo, ci.hi);
      },
      py::arg("samples"), py::arg("level") = 0.95);
  m.def("traversal_worst_case", &traversal_worst_case);

  m.def(
      "total_cost",
      [](double n, double alpha, double beta, double gamma, double big_n) {
        return total_cost(n, CostParams{alpha, beta, gamma, big_n});
      },
      py::arg("n"), py::arg("alpha") = 2.0, py::arg("beta") = 1.0,
      py::arg("gamma") = 1.0, py::arg("N") = 1.0);
  m.def(
      "optimal_n",
      [](double alpha, double beta, double gamma, double big_n) {
        return optimal_n(CostParams{alpha, beta, gamma, big_n});
      },
      py::arg("alpha") = 2.0, py::arg("beta") = 1.0, py::arg("gamma") = 1.0,
      py::arg("N") = 1.0);
  m.def(
      "brute_force_optimal_n",
      [](double alpha, double beta, double gamma, double big_n, long n_max) {
        return brute_force_optimal_n(CostParams{alpha, beta, gamma, big_n},
                                     n_max);
      },
      py::arg("alpha") = 2.0, py::arg("beta") = 1.0, py::arg("gamma") = 1.0,
      py::arg("N") = 1.0, py::arg("n_max") = 10000);
  m.def("scaling_exponent", &scaling_exponent);
  m.def("classify_scaling", [](double a, double b, double g) {
    return to_string(classify_scaling(a, b, g));
  });
}
