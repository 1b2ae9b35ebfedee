#pragma once

namespace drapsim {

class World;

// Per-agent decision logic plugged into World::tick. Policies hold no run
// state of their own; everything lives on the World.
class SchedulerPolicy {
 public:
  virtual ~SchedulerPolicy() = default;

  // Runs once per tick before any agent acts.
  virtual void on_tick_start(World&) {}

  // The mode handler for one agent; called exactly once per agent per tick,
  // in the tick's random permutation order.
  virtual void act(World& world, int agent_id) = 0;

  // Called after a cluster's task reached time_rem == 0 and was stamped
  // complete. The cluster's task reference has already been cleared.
  virtual void on_task_complete(World& world, int cluster_id) = 0;
};

}  // namespace drapsim
