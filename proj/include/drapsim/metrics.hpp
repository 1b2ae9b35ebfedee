#pragma once

#include <vector>

#include "drapsim/types.hpp"

namespace drapsim {

// Cluster utilization: cpu_req / cpu_cluster, clamped to 1 when the cluster
// is at or below the requirement. Throws std::domain_error on non-positive
// input.
double mu_cluster(int cpu_req, int cpu_cluster);

// Mean (start_time - arrival_time). Throws std::runtime_error if any task is
// missing a start time (incomplete run).
double t_wait(const std::vector<Task>& tasks);

struct Ci {
  double mean = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

// Student-t interval: mean +/- t(level, n-1) * stderr. Throws
// std::invalid_argument with fewer than 2 samples.
Ci confidence_interval(const std::vector<double>& samples, double level = 0.95);

// O(nm) queue traversal bound for one timestep.
long traversal_worst_case(long n_clusters, long m_tasks);

}  // namespace drapsim
