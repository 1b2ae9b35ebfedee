#include "drapsim/workload.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace drapsim {

int draw_cpu_req(const WorkloadSpec& spec, Rng& rng) {
  if (spec.distribution == Distribution::uniform) {
    return spec.cpu_min +
           static_cast<int>(rng.below(
               static_cast<std::uint64_t>(spec.cpu_max - spec.cpu_min + 1)));
  }
  const double mean = (spec.cpu_min + spec.cpu_max) / 2.0;
  const long v = std::lround(mean + spec.sigma * rng.gaussian());
  return static_cast<int>(std::clamp(
      v, static_cast<long>(spec.cpu_min), static_cast<long>(spec.cpu_max)));
}

std::vector<Task> generate(const WorkloadSpec& spec) {
  if (spec.count < 0) throw std::invalid_argument("workload count must be >= 0");
  if (spec.cpu_min < 1 || spec.cpu_min > spec.cpu_max) {
    throw std::invalid_argument("workload requires 1 <= cpu_min <= cpu_max");
  }
  if (spec.time_per_cpu < 1) {
    throw std::invalid_argument("time_per_cpu must be >= 1");
  }
  Rng rng(spec.seed);
  std::vector<int> reqs(static_cast<std::size_t>(spec.count));
  for (int& r : reqs) r = draw_cpu_req(spec, rng);

  switch (spec.ordering) {
    case Ordering::shuffled:
      rng.shuffle(reqs);
      break;
    case Ordering::adversarial_desc:
      std::stable_sort(reqs.begin(), reqs.end(), std::greater<int>());
      break;
    case Ordering::adversarial_asc:
      std::stable_sort(reqs.begin(), reqs.end());
      break;
  }

  std::vector<Task> tasks(reqs.size());
  for (std::size_t i = 0; i < reqs.size(); ++i) {
    Task& t = tasks[i];
    t.id = static_cast<int>(i);
    t.cpu_req = reqs[i];
    t.time_total = spec.time_per_cpu * reqs[i];
    t.time_rem = t.time_total;
    t.arrival_time = 0;
  }
  return tasks;
}

Distribution parse_distribution(const std::string& name) {
  if (name == "normal") return Distribution::normal;
  if (name == "uniform") return Distribution::uniform;
  throw std::invalid_argument("unknown distribution: " + name);
}

Ordering parse_ordering(const std::string& name) {
  if (name == "shuffled") return Ordering::shuffled;
  if (name == "adversarial-desc" || name == "adversarial_desc")
    return Ordering::adversarial_desc;
  if (name == "adversarial-asc" || name == "adversarial_asc")
    return Ordering::adversarial_asc;
  throw std::invalid_argument("unknown ordering: " + name);
}

}  // namespace drapsim
