#include "drapsim/drap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace drapsim {

ScanResult best_fit_scan(const World& world, int target_cpu, bool early_exit) {
  ScanResult res;
  int best_score = 0;
  for (std::size_t pos = 0; pos < world.queue.size(); ++pos) {
    ++res.examined;
    const Task& t = world.task(world.queue[pos]);
    const int score = std::abs(t.cpu_req - target_cpu);
    if (!res.task_id || score < best_score) {
      res.task_id = t.id;
      best_score = score;
    }
    if (early_exit && best_score == 0) break;
  }
  return res;
}

std::vector<int> recruit(World& world, int holder_id, int deficit) {
  if (deficit < 1) throw std::invalid_argument("recruit: deficit must be >= 1");
  std::vector<int> recruited;
  Agent& holder = world.agents[static_cast<std::size_t>(holder_id)];
  for (int nb : world.neighbors_of(holder_id)) {
    if (static_cast<int>(recruited.size()) == deficit) break;
    if (world.agents[static_cast<std::size_t>(nb)].mode == Mode::free_idle) {
      recruited.push_back(nb);
    }
  }
  if (recruited.empty()) return recruited;

  if (!holder.cluster_id) world.create_cluster(holder_id);
  Cluster& c = world.clusters.at(*holder.cluster_id);
  const Mode member_mode =
      c.task_id ? Mode::clustered_busy : Mode::clustered_idle;
  for (int nb : recruited) {
    Agent& a = world.agents[static_cast<std::size_t>(nb)];
    a.mode = member_mode;
    a.cluster_id = c.id;
    c.member_ids.push_back(nb);
  }
  return recruited;
}

bool resize_to_fit(World& world, int cluster_id, int cpu_req) {
  Cluster& c = world.clusters.at(cluster_id);
  while (static_cast<int>(c.member_ids.size()) > cpu_req) {
    // farthest-from-leader first, mirroring nearest-first recruitment
    int victim = -1;
    double victim_dist = -1.0;
    for (int m : c.member_ids) {
      if (m == c.leader_id) continue;
      const double d = world.distance(c.leader_id, m);
      if (d > victim_dist) {
        victim_dist = d;
        victim = m;
      }
    }
    world.shed_member(cluster_id, victim);
  }
  const int size = static_cast<int>(c.member_ids.size());
  if (size < cpu_req) {
    recruit(world, c.leader_id, cpu_req - size);
  }
  return static_cast<int>(c.member_ids.size()) == cpu_req;
}

void DrapPolicy::act(World& world, int agent_id) {
  Agent& a = world.agents[static_cast<std::size_t>(agent_id)];
  switch (a.mode) {
    case Mode::free_idle:
      act_free_idle(world, a);
      break;
    case Mode::free_busy:
      act_free_busy(world, a);
      break;
    case Mode::clustered_idle:
      act_clustered_idle(world, a);
      break;
    case Mode::clustered_busy:
      act_clustered_busy(world, a);
      break;
  }
}

void DrapPolicy::act_free_idle(World& world, Agent& a) {
  const ScanResult scan = mode1_select(world, cfg_.early_exit_on_exact_fit);
  world.traversal_count_this_tick += scan.examined;
  if (!scan.task_id) return;
  const auto pos = std::find(world.queue.begin(), world.queue.end(), *scan.task_id);
  Task& t = world.claim_from_queue(
      static_cast<std::size_t>(pos - world.queue.begin()));
  a.task_id = t.id;
  a.claim_tick = world.clock;
  a.mode = Mode::free_busy;
  if (t.cpu_req > 1) recruit(world, a.id, t.cpu_req - 1);
}

void DrapPolicy::act_free_busy(World& world, Agent& a) {
  const Task& t = world.task(*a.task_id);
  if (t.cpu_req <= 1) return;  // fully staffed solo task
  if (world.clock - a.claim_tick >= cfg_.starvation_timeout) {
    const int tid = t.id;
    a.task_id.reset();
    a.claim_tick = -1;
    a.mode = Mode::free_idle;
    world.return_to_queue_front(tid);
    return;
  }
  recruit(world, a.id, t.cpu_req - 1);
}

void DrapPolicy::act_clustered_idle(World& world, Agent& a) {
  Cluster& c = world.clusters.at(*a.cluster_id);
  if (c.leader_id != a.id) return;
  if (world.clock - *c.idle_since >= cfg_.cluster_persistence) {
    world.dissolve_cluster(c.id);
    return;
  }
  const int size = static_cast<int>(c.member_ids.size());
  const ScanResult scan = mode3_select(world, size, cfg_.early_exit_on_exact_fit);
  world.traversal_count_this_tick += scan.examined;
  if (!scan.task_id) return;
  const auto pos = std::find(world.queue.begin(), world.queue.end(), *scan.task_id);
  Task& t = world.claim_from_queue(
      static_cast<std::size_t>(pos - world.queue.begin()));
  c.task_id = t.id;
  c.claim_tick = world.clock;
  c.idle_since.reset();
  for (int m : c.member_ids) {
    world.agents[static_cast<std::size_t>(m)].mode = Mode::clustered_busy;
  }
  resize_to_fit(world, c.id, t.cpu_req);
}

void DrapPolicy::act_clustered_busy(World& world, Agent& a) {
  Cluster& c = world.clusters.at(*a.cluster_id);
  if (c.leader_id != a.id || !c.task_id) return;
  const Task& t = world.task(*c.task_id);
  const int size = static_cast<int>(c.member_ids.size());
  if (size >= t.cpu_req) return;
  if (world.clock - c.claim_tick >= cfg_.starvation_timeout) {
    const int tid = *c.task_id;
    c.task_id.reset();
    world.dissolve_cluster(c.id);
    world.return_to_queue_front(tid);
    return;
  }
  recruit(world, a.id, t.cpu_req - size);
}

void DrapPolicy::on_task_complete(World& world, int cluster_id) {
  if (cfg_.cluster_persistence <= 0) {
    world.dissolve_cluster(cluster_id);
    return;
  }
  Cluster& c = world.clusters.at(cluster_id);
  c.idle_since = world.clock;
  for (int m : c.member_ids) {
    world.agents[static_cast<std::size_t>(m)].mode = Mode::clustered_idle;
  }
}

}  // namespace drapsim
