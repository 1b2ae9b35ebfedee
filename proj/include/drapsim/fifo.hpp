#pragma once

#include <cstdint>

#include "drapsim/policy.hpp"
#include "drapsim/world.hpp"

namespace drapsim {

// Statically partitions all agents into fixed clusters of cluster_size (the
// last one absorbs the remainder). Members are chosen greedily: a random seed
// agent plus its nearest unassigned agents. Sized for the largest task class,
// these clusters routinely exceed cpu_req and leave members unused.
void init_fixed_clusters(World& world, int cluster_size, std::uint64_t seed);

// Repeatedly assigns the head task to the lowest-id idle cluster that can
// hold it (size >= cpu_req); stops when the queue is empty or the head does
// not fit any idle cluster. A task never overtakes the task ahead of it.
// Returns the number of assignments made.
int fifo_assign(World& world);

class FifoPolicy : public SchedulerPolicy {
 public:
  void on_tick_start(World& world) override { fifo_assign(world); }
  void act(World&, int) override {}  // FIFO agents make no individual decisions
  void on_task_complete(World& world, int cluster_id) override;
};

}  // namespace drapsim
