#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace drapsim {

// The four agent states. An agent is in exactly one at all times.
enum class Mode : int {
  free_idle = 1,       // clusterless, no task
  free_busy = 2,       // clusterless, holds a task
  clustered_idle = 3,  // member of a persisted cluster with no task
  clustered_busy = 4,  // member of a cluster servicing a task
};

struct Task {
  int id = 0;
  int cpu_req = 1;     // declared CPU count (== thread count)
  int time_total = 1;  // work in ticks when fully staffed
  int time_rem = 1;
  int arrival_time = 0;
  std::optional<long> start_time;         // tick the task was taken off the queue
  std::optional<long> first_staffed_tick; // first tick time_rem decremented
  std::optional<long> completion_time;
};

struct Agent {
  int id = 0;
  double x = 0.0;
  double y = 0.0;
  Mode mode = Mode::free_idle;
  std::optional<int> cluster_id;
  std::optional<int> task_id;  // set only for a clusterless holder (mode 2)
  long claim_tick = -1;
};

struct Cluster {
  int id = 0;
  int leader_id = 0;
  std::vector<int> member_ids;  // leader included, insertion order
  std::optional<int> task_id;
  std::optional<long> idle_since;
  long claim_tick = -1;
};

struct TickReport {
  int busy_nodes = 0;
  long traversals = 0;
  int completions = 0;
};

struct TickSample {
  long tick = 0;
  int busy_nodes = 0;
  double utilization = 0.0;
  long traversals = 0;
  long queue_length = 0;
};

using Timeseries = std::vector<TickSample>;

struct RunSummary {
  long t_complete = 0;
  double t_wait = 0.0;
  double mu_mean = 1.0;
  bool incomplete = false;
  std::string scheduler;
  int nodes = 0;
  int tasks = 0;
  std::uint64_t seed = 0;
};

}  // namespace drapsim
