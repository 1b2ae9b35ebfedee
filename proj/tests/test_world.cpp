#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "drapsim/drap.hpp"
#include "drapsim/world.hpp"

using namespace drapsim;

namespace {

std::vector<Task> make_tasks(const std::vector<int>& cpu_reqs,
                             int time_per_cpu = 25) {
  std::vector<Task> out;
  for (std::size_t i = 0; i < cpu_reqs.size(); ++i) {
    Task t;
    t.id = static_cast<int>(i);
    t.cpu_req = cpu_reqs[i];
    t.time_total = t.time_rem = time_per_cpu * cpu_reqs[i];
    out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_CASE("init_world places mode-1 agents and queues every task") {
  std::vector<int> reqs(1000, 1);
  World w = World::init(100, make_tasks(reqs), 0.15, 7);
  CHECK(w.agents.size() == 100);
  CHECK(w.queue.size() == 1000);
  CHECK(w.clock == 0);
  for (const Agent& a : w.agents) {
    CHECK(a.mode == Mode::free_idle);
    CHECK(a.x >= 0.0);
    CHECK(a.x < 1.0);
    CHECK(a.y >= 0.0);
    CHECK(a.y < 1.0);
  }
}

TEST_CASE("empty workload world is immediately finished") {
  World w = World::init(1, {}, 0.1, 7);
  CHECK(w.finished());
  CHECK(w.queue.empty());
}

TEST_CASE("same seed gives an identical world") {
  World a = World::init(50, {}, 0.2, 123);
  World b = World::init(50, {}, 0.2, 123);
  for (std::size_t i = 0; i < a.agents.size(); ++i) {
    CHECK(a.agents[i].x == b.agents[i].x);
    CHECK(a.agents[i].y == b.agents[i].y);
  }
}

TEST_CASE("init_world rejects bad configuration") {
  CHECK_THROWS_AS(World::init(0, {}, 0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS(World::init(1, {}, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(World::init(1, {}, 1.5, 1), std::invalid_argument);
}

TEST_CASE("neighbors: boundary distance is inclusive") {
  World w = World::init_at({{0.25, 0.5}, {0.5, 0.5}}, {}, 0.25, 1);
  CHECK(w.neighbors_of(0) == std::vector<int>{1});
  CHECK(w.neighbors_of(1) == std::vector<int>{0});
}

TEST_CASE("neighbors: single-agent world has none") {
  World w = World::init(1, {}, 0.5, 1);
  CHECK(w.neighbors_of(0).empty());
  CHECK_THROWS_AS(w.neighbors_of(1), std::out_of_range);
}

TEST_CASE("neighbors: collinear agents at 0.6r spacing") {
  const double r = 0.25;
  World w =
      World::init_at({{0.2, 0.5}, {0.2 + 0.6 * r, 0.5}, {0.2 + 1.2 * r, 0.5}},
                     {}, r, 1);
  CHECK(w.neighbors_of(1) == std::vector<int>{0, 2});
  CHECK(w.neighbors_of(0) == std::vector<int>{1});
  CHECK(w.neighbors_of(2) == std::vector<int>{1});
}

TEST_CASE("neighbors sorted by distance then id") {
  World w = World::init_at(
      {{0.5, 0.5}, {0.5, 0.6}, {0.45, 0.5}, {0.55, 0.5}}, {}, 0.2, 1);
  // ids 2 and 3 are both at 0.05, id 1 at 0.1
  CHECK(w.neighbors_of(0) == std::vector<int>{2, 3, 1});
}

TEST_CASE("single agent, single cpu task completes at clock 25") {
  World w = World::init(1, make_tasks({1}), 0.1, 3);
  DrapPolicy policy;
  while (!w.finished()) w.tick(policy);
  CHECK(w.clock == 25);
  CHECK(w.task(0).completion_time == 25);
  CHECK(w.task(0).start_time == 0);
  CHECK(w.task(0).first_staffed_tick == 0);
  CHECK(*w.task(0).completion_time - *w.task(0).first_staffed_tick ==
        w.task(0).time_total);
}

TEST_CASE("tick on a finished world is a no-op") {
  World w = World::init(3, {}, 0.1, 3);
  DrapPolicy policy;
  const TickReport rep = w.tick(policy);
  CHECK(rep.busy_nodes == 0);
  CHECK(rep.traversals == 0);
  CHECK(rep.completions == 0);
  CHECK(w.clock == 0);
}

TEST_CASE("unstaffable task starves back to the queue") {
  World w = World::init(1, make_tasks({3}), 0.1, 3);
  DrapPolicy policy;  // default starvation_timeout = 50
  w.tick(policy);
  CHECK(w.queue.empty());  // claimed and held
  CHECK(w.task(0).time_rem == w.task(0).time_total);
  for (int i = 0; i < 50; ++i) w.tick(policy);
  CHECK(w.queue == std::vector<int>{0});  // returned to the front
  CHECK(w.agents[0].mode == Mode::free_idle);
  CHECK(!w.task(0).start_time);
  CHECK(w.task(0).time_rem == w.task(0).time_total);  // never progressed
}

TEST_CASE("run_to_completion: empty workload completes in zero ticks") {
  World w = World::init(5, {}, 0.1, 3);
  DrapPolicy policy;
  auto [series, summary] = w.run_to_completion(policy, 1000);
  CHECK(summary.t_complete == 0);
  CHECK(!summary.incomplete);
  CHECK(series.empty());
}

TEST_CASE("run_to_completion: four sequential unit tasks on one node") {
  World w = World::init(1, make_tasks({1, 1, 1, 1}), 0.1, 3);
  DrapPolicy policy;
  auto [series, summary] = w.run_to_completion(policy, 1000);
  CHECK(summary.t_complete == 100);
  CHECK(!summary.incomplete);
  CHECK(summary.mu_mean == 1.0);
}

TEST_CASE("run_to_completion flags an undersized tick budget") {
  World w = World::init(1, make_tasks({2}), 0.1, 3);
  DrapPolicy policy;
  auto [series, summary] = w.run_to_completion(policy, 200);
  CHECK(summary.incomplete);
  CHECK(summary.t_complete == 200);
}
