#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "hitch/adversary.hpp"
#include "hitch/offline.hpp"

using namespace hitch;

namespace {

UavConfig ref_config() { return {100.0, 100.0, 10.0, 60.0, 20.0}; }

Instance with_rides(std::vector<RideTrip> rides) {
  Instance inst;
  inst.config = ref_config();
  for (size_t i = 0; i < rides.size(); ++i)
    rides[i].id = static_cast<int>(i);
  inst.rides = std::move(rides);
  return inst;
}

// Maximum boarding power over every feasible chain ending at `target`,
// found by exhaustive enumeration. Independent of the graph code.
double brute_max_power(const Instance& inst, const RideTrip& target) {
  const UavConfig& cfg = inst.config;
  const RideTrip origin = origin_ride();
  std::vector<RideTrip> rides = sort_rides(inst);
  double best = -1e18;
  const size_t n = rides.size();
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    double p = cfg.p0;
    const RideTrip* prev = &origin;
    bool feasible = true;
    bool reached = false;
    for (size_t i = 0; i < n && feasible; ++i) {
      if (!(mask & (uint64_t{1} << i))) continue;
      const RideTrip& ride = rides[i];
      if (ride.o > target.o || (ride.o == target.o && ride.id != target.id))
        continue;  // chains may only use rides at or before the target
      if (prev != &origin && !(ride.o > prev->o)) {
        feasible = false;
        break;
      }
      if (!compatible(*prev, p, ride, cfg)) {
        feasible = false;
        break;
      }
      p = power_transfer(p, *prev, ride, cfg);
      prev = &rides[i];
      if (ride.id == target.id) reached = true;
    }
    if (feasible && reached && prev->id == target.id) best = std::max(best, p);
  }
  return best;
}

}  // namespace

TEST_CASE("ride sorting") {
  SUBCASE("already sorted input is unchanged") {
    Instance inst = with_rides({{0, 1, 10, 20, 50}, {0, 2, 30, 40, 50}});
    const auto sorted = sort_rides(inst);
    CHECK(sorted[0].o == 10);
    CHECK(sorted[1].o == 30);
  }
  SUBCASE("reversed input sorts by start location") {
    Instance inst = with_rides(
        {{0, 1, 50, 60, 50}, {0, 1, 30, 40, 50}, {0, 1, 10, 20, 50}});
    const auto sorted = sort_rides(inst);
    CHECK(sorted[0].o == 10);
    CHECK(sorted[1].o == 30);
    CHECK(sorted[2].o == 50);
  }
  SUBCASE("equal start locations break ties by departure then id") {
    Instance inst = with_rides(
        {{0, 2, 10, 20, 50}, {0, 1, 10, 25, 50}, {0, 1, 10, 30, 50}});
    const auto sorted = sort_rides(inst);
    CHECK(sorted[0].id == 1);
    CHECK(sorted[1].id == 2);
    CHECK(sorted[2].id == 0);
  }
}

TEST_CASE("compatibility graph construction") {
  SUBCASE("no rides leaves only the origin terminal") {
    const HitchGraph graph = build_hitch_graph(with_rides({}));
    CHECK(graph.nodes.empty());
    CHECK(graph.origin_terminal == doctest::Approx(4.0));
  }
  SUBCASE("singleton ride boards with exactly drained power") {
    const HitchGraph graph =
        build_hitch_graph(with_rides({{0, 0.4, 40, 85, 60}}));
    REQUIRE(graph.nodes.size() == 1);
    CHECK(graph.nodes[0].weight == doctest::Approx(0.0));
    CHECK(graph.nodes[0].pred == -1);
    CHECK(graph.nodes[0].terminal == doctest::Approx(1.3));
    CHECK(graph.skipped.empty());
  }
  SUBCASE("a ride out of reach is skipped, not admitted") {
    // Departs from beyond l_f before any recharge could get there.
    const HitchGraph graph =
        build_hitch_graph(with_rides({{0, 0.5, 50, 60, 60}}));
    CHECK(graph.nodes.empty());
    REQUIRE(graph.skipped.size() == 1);
    CHECK(graph.skipped[0] == 0);
    // No feasible plan contains it either.
    CHECK(brute_force_optimal(with_rides({{0, 0.5, 50, 60, 60}})).taken.empty());
  }
  SUBCASE("node weights chain through the max-power predecessor") {
    Instance inst = with_rides({{0, 0.4, 40, 50, 50},    // reachable, P=0
                                {0, 0.2, 10, 20, 50},    // early short hop
                                {0, 1.6, 60, 90, 60}});  // after either
    const HitchGraph graph = build_hitch_graph(inst);
    REQUIRE(graph.nodes.size() == 3);
    for (const HitchGraphNode& node : graph.nodes) {
      CHECK(node.weight >= -kEpsPow);
      const double via_pred =
          node.pred < 0
              ? power_transfer(inst.config.p0, origin_ride(), node.ride,
                               inst.config)
              : power_transfer(graph.nodes[node.pred].weight,
                               graph.nodes[node.pred].ride, node.ride,
                               inst.config);
      CHECK(node.weight == doctest::Approx(via_pred));
    }
    // Nodes appear in start-location order.
    CHECK(graph.nodes[0].ride.o == 10);
    CHECK(graph.nodes[1].ride.o == 40);
    CHECK(graph.nodes[2].ride.o == 60);
  }
}

TEST_CASE("optimal plan") {
  SUBCASE("empty instance gives the idle plan") {
    const HitchPlan plan = optimal_plan(with_rides({}));
    CHECK(plan.taken.empty());
    CHECK(plan.arrival_time == doctest::Approx(4.0));
  }
  SUBCASE("singleton instance takes the ride") {
    Instance inst = with_rides({{0, 0.4, 40, 85, 60}});
    const HitchPlan plan = optimal_plan(inst);
    REQUIRE(plan.taken.size() == 1);
    CHECK(plan.arrival_time == doctest::Approx(1.3));
    CHECK(validate_plan(plan, inst).ok);
    const HitchPlan brute = brute_force_optimal(inst);
    CHECK(brute.taken.size() == 1);
    CHECK(brute.arrival_time == doctest::Approx(plan.arrival_time));
  }
  SUBCASE("worthless rides are left alone") {
    // Taking this ride would strictly increase the arrival time, so the
    // optimum is the empty plan even though the ride is feasible.
    Instance inst = with_rides({{0.5, 3.8, 50, 51, 60}});
    const HitchPlan plan = optimal_plan(inst);
    CHECK(plan.taken.empty());
    CHECK(plan.arrival_time == doctest::Approx(4.0));
  }
}

TEST_CASE("brute force guard") {
  Instance inst = with_rides({});
  for (int i = 0; i < 21; ++i)
    inst.rides.push_back({0, 1, 1.0 + i, 2.0 + i, 50, i});
  CHECK_THROWS_AS(brute_force_optimal(inst), std::invalid_argument);
}

TEST_CASE("oracle equivalence on random instances") {
  const UavConfig cfg = ref_config();
  for (uint64_t seed = 1; seed <= 150; ++seed) {
    const int n = static_cast<int>(seed % 9) + 2;
    const DtMode mode =
        seed % 2 ? DtMode::flexible() : DtMode::fixed_at(0.5 + (seed % 3));
    const Instance inst = random_instance(seed, n, cfg, mode);
    const HitchPlan fast = optimal_plan(inst);
    const HitchPlan brute = brute_force_optimal(inst);
    INFO("seed ", seed);
    CHECK(fast.arrival_time ==
          doctest::Approx(brute.arrival_time).epsilon(1e-9));
    CHECK(validate_plan(fast, inst).ok);
    CHECK(fast.arrival_time <= arrival_time_empty(cfg) + kEpsTime);
    for (size_t i = 1; i < fast.taken.size(); ++i)
      CHECK(fast.taken[i].o > fast.taken[i - 1].o);
  }
}

TEST_CASE("max-power soundness of admitted nodes") {
  const UavConfig cfg = ref_config();
  for (uint64_t seed = 300; seed < 330; ++seed) {
    const Instance inst = random_instance(seed, 7, cfg, DtMode::flexible());
    const HitchGraph graph = build_hitch_graph(inst);
    for (const HitchGraphNode& node : graph.nodes) {
      const double best = brute_max_power(inst, node.ride);
      INFO("seed ", seed, " ride ", node.ride.id);
      CHECK(node.weight == doctest::Approx(best).epsilon(1e-9));
    }
  }
}
