#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drapsim/rng.hpp"
#include "drapsim/types.hpp"

namespace drapsim {

enum class Distribution { normal, uniform };
enum class Ordering { shuffled, adversarial_desc, adversarial_asc };

struct WorkloadSpec {
  int count = 1000;
  Distribution distribution = Distribution::normal;
  Ordering ordering = Ordering::shuffled;
  int time_per_cpu = 25;
  int cpu_min = 1;
  int cpu_max = 5;
  double sigma = 1.0;  // stddev of the discretized normal draw
  std::uint64_t seed = 0;
};

// Draws `count` tasks with cpu_req from the configured distribution and
// time_total = time_per_cpu * cpu_req, then applies the ordering. Task ids
// match final queue positions.
std::vector<Task> generate(const WorkloadSpec& spec);

// One cpu_req draw from the spec's distribution (shared with the FIFO
// static-partition sizes).
int draw_cpu_req(const WorkloadSpec& spec, Rng& rng);

Distribution parse_distribution(const std::string& name);
Ordering parse_ordering(const std::string& name);

}  // namespace drapsim
