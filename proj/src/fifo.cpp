#include "drapsim/fifo.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace drapsim {

void init_fixed_clusters(World& world, int cluster_size, std::uint64_t seed) {
  if (!world.clusters.empty()) {
    throw std::invalid_argument("init_fixed_clusters requires a fresh world");
  }
  if (cluster_size < 1) {
    throw std::invalid_argument("cluster_size must be >= 1");
  }
  Rng rng(seed);
  std::vector<int> unassigned;
  unassigned.reserve(world.agents.size());
  for (const Agent& a : world.agents) unassigned.push_back(a.id);

  while (!unassigned.empty()) {
    const int size =
        std::min(cluster_size, static_cast<int>(unassigned.size()));
    const std::size_t pick = static_cast<std::size_t>(
        rng.below(static_cast<std::uint64_t>(unassigned.size())));
    const int leader = unassigned[pick];
    std::sort(unassigned.begin(), unassigned.end(), [&](int a, int b) {
      const double da = world.distance(leader, a);
      const double db = world.distance(leader, b);
      return da != db ? da < db : a < b;
    });  // leader sorts first at distance 0

    world.agents[static_cast<std::size_t>(leader)].mode = Mode::clustered_idle;
    Cluster& c = world.create_cluster(leader);
    for (int i = 1; i < size; ++i) {
      const int m = unassigned[static_cast<std::size_t>(i)];
      Agent& a = world.agents[static_cast<std::size_t>(m)];
      a.mode = Mode::clustered_idle;
      a.cluster_id = c.id;
      c.member_ids.push_back(m);
    }
    unassigned.erase(unassigned.begin(), unassigned.begin() + size);
  }
}

int fifo_assign(World& world) {
  int assignments = 0;
  while (!world.queue.empty()) {
    const Task& head = world.task(world.queue.front());
    ++world.traversal_count_this_tick;  // one head inspection
    Cluster* chosen = nullptr;
    for (auto& [cid, c] : world.clusters) {
      if (!c.task_id &&
          static_cast<int>(c.member_ids.size()) >= head.cpu_req) {
        chosen = &c;
        break;  // lowest id wins
      }
    }
    if (chosen == nullptr) break;  // strict FIFO: the head never gets overtaken
    Task& t = world.claim_from_queue(0);
    chosen->task_id = t.id;
    chosen->claim_tick = world.clock;
    chosen->idle_since.reset();
    for (int m : chosen->member_ids) {
      world.agents[static_cast<std::size_t>(m)].mode = Mode::clustered_busy;
    }
    ++assignments;
  }
  return assignments;
}

void FifoPolicy::on_task_complete(World& world, int cluster_id) {
  Cluster& c = world.clusters.at(cluster_id);
  c.idle_since = world.clock;
  for (int m : c.member_ids) {
    world.agents[static_cast<std::size_t>(m)].mode = Mode::clustered_idle;
  }
}

}  // namespace drapsim
