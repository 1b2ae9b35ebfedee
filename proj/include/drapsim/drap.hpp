#pragma once

#include <optional>
#include <vector>

#include "drapsim/policy.hpp"
#include "drapsim/world.hpp"

namespace drapsim {

struct DrapConfig {
  // Ticks an empty cluster survives before dissociating. 0 reproduces the
  // base algorithm (mode 3 never entered); > 0 enables cluster memory.
  int cluster_persistence = 0;
  // Ticks an under-staffed holder keeps retrying before the task goes back
  // to the front of the queue.
  int starvation_timeout = 50;
  // Stop a best-fit scan as soon as it hits an exact fit.
  bool early_exit_on_exact_fit = true;
};

struct ScanResult {
  std::optional<int> task_id;
  long examined = 0;  // queue entries inspected
};

// Best-fit scan over the queue snapshot: minimizes |cpu_req - target_cpu|,
// ties broken by earliest queue position.
ScanResult best_fit_scan(const World& world, int target_cpu, bool early_exit);

// Mode 1 scan: target of one CPU.
inline ScanResult mode1_select(const World& world, bool early_exit = true) {
  return best_fit_scan(world, 1, early_exit);
}

// Mode 3 scan: target of the current cluster size.
inline ScanResult mode3_select(const World& world, int cpu_cluster,
                               bool early_exit = true) {
  return best_fit_scan(world, cpu_cluster, early_exit);
}

// Recruits up to `deficit` free (mode 1) neighbors of the holder, nearest
// first, creating the cluster record if the holder is clusterless. Partial
// recruitment is a normal outcome. Returns the recruited agent ids.
std::vector<int> recruit(World& world, int holder_id, int deficit);

// Sheds surplus members (farthest from the leader first) or recruits the
// shortfall so the cluster matches cpu_req. Returns true on an exact match.
bool resize_to_fit(World& world, int cluster_id, int cpu_req);

class DrapPolicy : public SchedulerPolicy {
 public:
  explicit DrapPolicy(DrapConfig config = {}) : cfg_(config) {}

  void act(World& world, int agent_id) override;
  void on_task_complete(World& world, int cluster_id) override;

  const DrapConfig& config() const { return cfg_; }

 private:
  void act_free_idle(World& world, Agent& agent);
  void act_free_busy(World& world, Agent& agent);
  void act_clustered_idle(World& world, Agent& agent);
  void act_clustered_busy(World& world, Agent& agent);

  DrapConfig cfg_;
};

}  // namespace drapsim
