#include "drapsim/world.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "drapsim/metrics.hpp"
#include "drapsim/policy.hpp"

namespace drapsim {

namespace {
constexpr double kMaxRadius = 1.4142135623730951;  // sqrt(2), unit square diameter
}

World World::init(int agent_count, std::vector<Task> tasks,
                  double neighbor_radius, std::uint64_t seed) {
  if (agent_count < 1) {
    throw std::invalid_argument("agent_count must be >= 1");
  }
  if (!(neighbor_radius > 0.0) || neighbor_radius > kMaxRadius) {
    throw std::invalid_argument("neighbor_radius must be in (0, sqrt(2)]");
  }
  World w;
  w.rng = Rng(seed);
  w.neighbor_radius = neighbor_radius;
  w.agents.resize(static_cast<std::size_t>(agent_count));
  for (int i = 0; i < agent_count; ++i) {
    Agent& a = w.agents[static_cast<std::size_t>(i)];
    a.id = i;
    a.x = w.rng.uniform();
    a.y = w.rng.uniform();
  }
  w.tasks_ = std::move(tasks);
  w.queue.reserve(w.tasks_.size());
  for (std::size_t i = 0; i < w.tasks_.size(); ++i) {
    w.tasks_[i].arrival_time = 0;
    w.queue.push_back(w.tasks_[i].id);
  }
  w.build_neighbor_lists();
  return w;
}

World World::init_at(const std::vector<std::pair<double, double>>& positions,
                     std::vector<Task> tasks, double neighbor_radius,
                     std::uint64_t seed) {
  World w = init(static_cast<int>(positions.size()), std::move(tasks),
                 neighbor_radius, seed);
  for (std::size_t i = 0; i < positions.size(); ++i) {
    w.agents[i].x = positions[i].first;
    w.agents[i].y = positions[i].second;
  }
  w.build_neighbor_lists();
  return w;
}

double World::distance(int a, int b) const {
  const Agent& p = agents[static_cast<std::size_t>(a)];
  const Agent& q = agents[static_cast<std::size_t>(b)];
  return std::hypot(p.x - q.x, p.y - q.y);
}

void World::build_neighbor_lists() {
  const int n = static_cast<int>(agents.size());
  neighbor_lists_.assign(static_cast<std::size_t>(n), {});
  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<double, int>> near;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double d = distance(i, j);
      if (d <= neighbor_radius) near.emplace_back(d, j);
    }
    std::sort(near.begin(), near.end());
    auto& list = neighbor_lists_[static_cast<std::size_t>(i)];
    list.reserve(near.size());
    for (const auto& [d, j] : near) list.push_back(j);
  }
}

const std::vector<int>& World::neighbors_of(int agent_id) const {
  if (agent_id < 0 || agent_id >= static_cast<int>(agents.size())) {
    throw std::out_of_range("unknown agent id");
  }
  return neighbor_lists_[static_cast<std::size_t>(agent_id)];
}

bool World::finished() const {
  if (!queue.empty()) return false;
  for (const auto& [id, c] : clusters) {
    if (c.task_id) return false;
  }
  for (const Agent& a : agents) {
    if (a.task_id) return false;
  }
  return true;
}

Task& World::claim_from_queue(std::size_t queue_pos) {
  Task& t = task(queue[queue_pos]);
  queue.erase(queue.begin() + static_cast<std::ptrdiff_t>(queue_pos));
  t.start_time = clock;
  return t;
}

void World::return_to_queue_front(int task_id) {
  Task& t = task(task_id);
  t.start_time.reset();
  queue.insert(queue.begin(), task_id);
}

Cluster& World::create_cluster(int leader_id) {
  Agent& leader = agents[static_cast<std::size_t>(leader_id)];
  Cluster c;
  c.id = next_cluster_id_++;
  c.leader_id = leader_id;
  c.member_ids.push_back(leader_id);
  c.task_id = leader.task_id;
  c.claim_tick = leader.claim_tick;
  leader.task_id.reset();
  leader.cluster_id = c.id;
  leader.mode = c.task_id ? Mode::clustered_busy : Mode::clustered_idle;
  auto [it, inserted] = clusters.emplace(c.id, std::move(c));
  return it->second;
}

void World::dissolve_cluster(int cluster_id) {
  const Cluster& c = clusters.at(cluster_id);
  for (int m : c.member_ids) {
    Agent& a = agents[static_cast<std::size_t>(m)];
    a.mode = Mode::free_idle;
    a.cluster_id.reset();
    a.task_id.reset();
    a.claim_tick = -1;
  }
  clusters.erase(cluster_id);
}

void World::shed_member(int cluster_id, int member_id) {
  Cluster& c = clusters.at(cluster_id);
  if (member_id == c.leader_id) {
    throw std::invalid_argument("cannot shed the cluster leader");
  }
  auto it = std::find(c.member_ids.begin(), c.member_ids.end(), member_id);
  if (it == c.member_ids.end()) {
    throw std::out_of_range("agent is not a member of this cluster");
  }
  c.member_ids.erase(it);
  Agent& a = agents[static_cast<std::size_t>(member_id)];
  a.mode = Mode::free_idle;
  a.cluster_id.reset();
  a.claim_tick = -1;
}

int World::cpu_cluster_of(int agent_id) const {
  const Agent& a = agents.at(static_cast<std::size_t>(agent_id));
  if (!a.cluster_id) return 1;
  return static_cast<int>(clusters.at(*a.cluster_id).member_ids.size());
}

int World::time_rem_of(int agent_id) const {
  const Agent& a = agents.at(static_cast<std::size_t>(agent_id));
  if (a.task_id) return task(*a.task_id).time_rem;
  if (a.cluster_id) {
    const Cluster& c = clusters.at(*a.cluster_id);
    if (c.task_id) return task(*c.task_id).time_rem;
  }
  return 0;
}

TickReport World::tick(SchedulerPolicy& policy) {
  TickReport rep;
  traversal_count_this_tick = 0;
  if (finished()) return rep;

  policy.on_tick_start(*this);

  std::vector<int> order(agents.size());
  for (std::size_t i = 0; i < agents.size(); ++i) order[i] = agents[i].id;
  rng.shuffle(order);
  for (int id : order) policy.act(*this, id);

  // Progress phase: a task advances iff its staffing covers cpu_req.
  std::vector<int> done_cluster_tasks;  // cluster ids
  std::vector<int> done_solo_holders;   // agent ids
  for (auto& [cid, c] : clusters) {
    if (!c.task_id) continue;
    Task& t = task(*c.task_id);
    if (static_cast<int>(c.member_ids.size()) >= t.cpu_req) {
      if (!t.first_staffed_tick) {
        t.first_staffed_tick = clock;
        // one utilization sample per assignment, at the size that serves it
        ++mu_denom_;
        mu_numer_ +=
            mu_cluster(t.cpu_req, static_cast<int>(c.member_ids.size()));
      }
      --t.time_rem;
      rep.busy_nodes += t.cpu_req;
      if (t.time_rem == 0) done_cluster_tasks.push_back(cid);
    }
  }
  for (Agent& a : agents) {
    if (a.mode != Mode::free_busy || !a.task_id) continue;
    Task& t = task(*a.task_id);
    if (t.cpu_req <= 1) {
      if (!t.first_staffed_tick) {
        t.first_staffed_tick = clock;
        ++mu_denom_;
        mu_numer_ += 1.0;  // a lone holder exactly covers a one-cpu task
      }
      --t.time_rem;
      rep.busy_nodes += t.cpu_req;
      if (t.time_rem == 0) done_solo_holders.push_back(a.id);
    }
  }

  ++clock;

  for (int cid : done_cluster_tasks) {
    Cluster& c = clusters.at(cid);
    Task& t = task(*c.task_id);
    t.completion_time = clock;
    completed.push_back(t.id);
    c.task_id.reset();
    c.claim_tick = -1;
    policy.on_task_complete(*this, cid);
    ++rep.completions;
  }
  for (int aid : done_solo_holders) {
    Agent& a = agents[static_cast<std::size_t>(aid)];
    Task& t = task(*a.task_id);
    t.completion_time = clock;
    completed.push_back(t.id);
    a.task_id.reset();
    a.claim_tick = -1;
    a.mode = Mode::free_idle;
    ++rep.completions;
  }

  rep.traversals = traversal_count_this_tick;
  return rep;
}

std::pair<Timeseries, RunSummary> World::run_to_completion(
    SchedulerPolicy& policy, long max_ticks) {
  if (max_ticks < 1) throw std::invalid_argument("max_ticks must be >= 1");
  Timeseries series;
  for (long i = 0; i < max_ticks && !finished(); ++i) {
    const TickReport rep = tick(policy);
    series.push_back(TickSample{
        clock - 1, rep.busy_nodes,
        static_cast<double>(rep.busy_nodes) / static_cast<double>(agents.size()),
        rep.traversals, static_cast<long>(queue.size())});
  }
  RunSummary summary;
  summary.t_complete = clock;
  summary.incomplete = !finished();
  summary.nodes = static_cast<int>(agents.size());
  summary.tasks = static_cast<int>(tasks_.size());
  double wait_sum = 0.0;
  long wait_count = 0;
  for (const Task& t : tasks_) {
    if (t.start_time) {
      wait_sum += static_cast<double>(*t.start_time - t.arrival_time);
      ++wait_count;
    }
  }
  summary.t_wait = wait_count > 0 ? wait_sum / static_cast<double>(wait_count) : 0.0;
  summary.mu_mean =
      mu_denom_ > 0 ? mu_numer_ / static_cast<double>(mu_denom_) : 1.0;
  return {std::move(series), summary};
}

}  // namespace drapsim
