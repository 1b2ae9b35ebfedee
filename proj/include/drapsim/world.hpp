#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "drapsim/rng.hpp"
#include "drapsim/types.hpp"

namespace drapsim {

class SchedulerPolicy;

// World state plus the randomized lock-step tick engine. Policies mutate the
// world through the helpers below; one World is strictly single-threaded.
class World {
 public:
  // Agents placed uniformly at random in the unit square.
  static World init(int agent_count, std::vector<Task> tasks,
                    double neighbor_radius, std::uint64_t seed);

  // Agents at explicit positions (tests and python bindings).
  static World init_at(const std::vector<std::pair<double, double>>& positions,
                       std::vector<Task> tasks, double neighbor_radius,
                       std::uint64_t seed);

  // Other agents within neighbor_radius (closed ball), sorted by
  // (distance asc, id asc). Throws std::out_of_range on an unknown id.
  const std::vector<int>& neighbors_of(int agent_id) const;

  TickReport tick(SchedulerPolicy& policy);

  // Ticks until the queue is empty and nothing is running, or max_ticks.
  std::pair<Timeseries, RunSummary> run_to_completion(SchedulerPolicy& policy,
                                                      long max_ticks);

  bool finished() const;

  double distance(int a, int b) const;

  // --- queue / cluster plumbing used by policies ---

  // Removes the task at the given queue position and stamps start_time.
  Task& claim_from_queue(std::size_t queue_pos);

  // Puts a starved task back at the head of the queue; start_time is cleared
  // so the wait clock restarts.
  void return_to_queue_front(int task_id);

  // Creates a cluster around a clusterless holder; the holder's task (if any)
  // moves onto the cluster record.
  Cluster& create_cluster(int leader_id);

  // All members revert to mode 1; any task must be detached by the caller.
  void dissolve_cluster(int cluster_id);

  // Removes one non-leader member, reverting it to mode 1.
  void shed_member(int cluster_id, int member_id);

  int cpu_cluster_of(int agent_id) const;  // info vector: cluster size, else 1
  int time_rem_of(int agent_id) const;     // info vector: task time left, else 0

  Task& task(int task_id) { return tasks_[static_cast<std::size_t>(task_id)]; }
  const Task& task(int task_id) const {
    return tasks_[static_cast<std::size_t>(task_id)];
  }

  std::vector<Agent> agents;
  std::map<int, Cluster> clusters;  // ordered: deterministic iteration
  std::vector<int> queue;           // task ids, front at index 0
  std::vector<int> completed;       // task ids in completion order
  long clock = 0;
  Rng rng{0};
  double neighbor_radius = 0.0;
  long traversal_count_this_tick = 0;

 private:
  World() = default;
  void build_neighbor_lists();

  std::vector<Task> tasks_;
  std::vector<std::vector<int>> neighbor_lists_;
  int next_cluster_id_ = 0;
  // per-assignment utilization accumulators (one sample per staffed task)
  double mu_numer_ = 0.0;
  long mu_denom_ = 0;
};

}  // namespace drapsim
