#include "drapsim/metrics.hpp"

#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <stdexcept>

namespace drapsim {

double mu_cluster(int cpu_req, int cpu_cluster) {
  if (cpu_req < 1 || cpu_cluster < 1) {
    throw std::domain_error("mu_cluster requires positive cpu counts");
  }
  if (cpu_cluster <= cpu_req) return 1.0;
  return static_cast<double>(cpu_req) / static_cast<double>(cpu_cluster);
}

double t_wait(const std::vector<Task>& tasks) {
  double sum = 0.0;
  for (const Task& t : tasks) {
    if (!t.start_time) {
      throw std::runtime_error("t_wait: task without start_time (incomplete run)");
    }
    sum += static_cast<double>(*t.start_time - t.arrival_time);
  }
  return tasks.empty() ? 0.0 : sum / static_cast<double>(tasks.size());
}

Ci confidence_interval(const std::vector<double>& samples, double level) {
  const std::size_t n = samples.size();
  if (n < 2) {
    throw std::invalid_argument("confidence_interval needs at least 2 samples");
  }
  double mean = 0.0;
  for (double s : samples) mean += s;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double s : samples) ss += (s - mean) * (s - mean);
  const double stderr_ = std::sqrt(ss / static_cast<double>(n - 1)) /
                         std::sqrt(static_cast<double>(n));
  const boost::math::students_t dist(static_cast<double>(n - 1));
  const double tcrit = boost::math::quantile(dist, 0.5 + level / 2.0);
  const double half = tcrit * stderr_;
  return Ci{mean, mean - half, mean + half};
}

long traversal_worst_case(long n_clusters, long m_tasks) {
  if (n_clusters < 0 || m_tasks < 0) {
    throw std::domain_error("traversal_worst_case requires non-negative counts");
  }
  return n_clusters * m_tasks;
}

}  // namespace drapsim
