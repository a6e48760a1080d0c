#include "hitch/offline.hpp"

#include <algorithm>
#include <stdexcept>

namespace hitch {

std::vector<RideTrip> sort_rides(const Instance& inst) {
  std::vector<RideTrip> rides = inst.rides;
  std::stable_sort(rides.begin(), rides.end(),
                   [](const RideTrip& a, const RideTrip& b) {
                     if (a.o != b.o) return a.o < b.o;
                     if (a.t != b.t) return a.t < b.t;
                     return a.id < b.id;
                   });
  return rides;
}

HitchGraph build_hitch_graph(const Instance& inst) {
  const UavConfig& cfg = inst.config;
  const RideTrip origin = origin_ride();
  HitchGraph graph;
  graph.origin_terminal = arrival_time_empty(cfg);

  const std::vector<RideTrip> rides = sort_rides(inst);
  graph.nodes.reserve(rides.size());
  for (const RideTrip& ride : rides) {
    // Candidates are scanned in admission order so that PTF ties resolve
    // to the earliest-admitted predecessor; the origin counts as earliest.
    int best_pred = -2;
    double best_power = 0;
    if (compatible(origin, cfg.p0, ride, cfg)) {
      best_pred = -1;
      best_power = power_transfer(cfg.p0, origin, ride, cfg);
    }
    for (size_t j = 0; j < graph.nodes.size(); ++j) {
      const HitchGraphNode& node = graph.nodes[j];
      if (!(node.ride.o < ride.o)) continue;
      if (!compatible(node.ride, node.weight, ride, cfg)) continue;
      const double p = power_transfer(node.weight, node.ride, ride, cfg);
      if (best_pred == -2 || p > best_power) {
        best_pred = static_cast<int>(j);
        best_power = p;
      }
    }
    if (best_pred == -2) {
      graph.skipped.push_back(ride.id);
      continue;
    }
    HitchGraphNode node;
    node.ride = ride;
    node.weight = best_power;
    node.pred = best_pred;
    node.depth = best_pred >= 0 ? graph.nodes[best_pred].depth + 1 : 1;
    node.terminal = arrival_time_last_ride(ride, best_power, cfg);
    graph.nodes.push_back(node);
  }
  return graph;
}

HitchPlan optimal_plan(const Instance& inst) {
  const HitchGraph graph = build_hitch_graph(inst);

  // Empty plan via the origin's terminal edge is the fallback.
  int best = -1;
  double best_terminal = graph.origin_terminal;
  int best_depth = 0;
  for (size_t j = 0; j < graph.nodes.size(); ++j) {
    const HitchGraphNode& node = graph.nodes[j];
    const bool better =
        node.terminal < best_terminal - kEpsTime ||
        (node.terminal <= best_terminal + kEpsTime &&
         node.depth < best_depth);
    if (better) {
      best = static_cast<int>(j);
      best_terminal = node.terminal;
      best_depth = node.depth;
    }
  }

  std::vector<RideTrip> chain;
  for (int j = best; j >= 0; j = graph.nodes[j].pred)
    chain.push_back(graph.nodes[j].ride);
  std::reverse(chain.begin(), chain.end());

  HitchPlan plan = make_plan(chain, inst.config);
  plan.skipped_rides = graph.skipped;
  return plan;
}

HitchPlan brute_force_optimal(const Instance& inst) {
  if (inst.rides.size() > 20)
    throw std::invalid_argument(
        "brute_force_optimal: more than 20 rides (exponential search)");
  const UavConfig& cfg = inst.config;
  const RideTrip origin = origin_ride();
  const std::vector<RideTrip> rides = sort_rides(inst);
  const size_t n = rides.size();

  std::vector<RideTrip> subset, best_subset;
  double best_xi = arrival_time_empty(cfg);
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
    subset.clear();
    bool feasible = true;
    double p = cfg.p0;
    const RideTrip* prev = &origin;
    for (size_t i = 0; i < n && feasible; ++i) {
      if (!(mask & (uint64_t{1} << i))) continue;
      const RideTrip& ride = rides[i];
      if (!subset.empty() && !(ride.o > prev->o)) {
        feasible = false;  // two rides sharing a boarding point
        break;
      }
      if (!compatible(*prev, p, ride, cfg)) {
        feasible = false;
        break;
      }
      p = power_transfer(p, *prev, ride, cfg);
      subset.push_back(ride);
      prev = &subset.back();
    }
    if (!feasible) continue;
    const double xi = arrival_time_plan(subset, cfg);
    if (xi < best_xi - kEpsTime ||
        (xi <= best_xi + kEpsTime && subset.size() < best_subset.size())) {
      best_xi = xi;
      best_subset = subset;
    }
  }
  return make_plan(best_subset, cfg);
}

}  // namespace hitch
