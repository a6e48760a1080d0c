#pragma once

#include <vector>

#include "hitch/core.hpp"
#include "hitch/types.hpp"

namespace hitch {

// One admitted ride in the compatibility graph. `weight` is the maximum
// power the UAV can hold when boarding this ride via already-admitted
// predecessors; `pred` points at the unique predecessor achieving it
// (-1 for the virtual origin). `terminal` is the arrival time at A when
// this ride is taken last.
struct HitchGraphNode {
  RideTrip ride;
  double weight = 0;
  int pred = -1;
  int depth = 1;  // rides on the chain back to the origin
  double terminal = 0;
};

struct HitchGraph {
  std::vector<HitchGraphNode> nodes;  // in admission (= start location) order
  double origin_terminal = 0;         // arrival time of the empty plan
  std::vector<int> skipped;           // ride ids with no compatible predecessor
};

// Stable sort by (start location, departure time, id); the only taking
// order considered downstream.
std::vector<RideTrip> sort_rides(const Instance& inst);

HitchGraph build_hitch_graph(const Instance& inst);

// OptimalHitching: min-terminal node of the graph, predecessors walked
// back to the origin. Ties by fewest rides, then earliest admission.
HitchPlan optimal_plan(const Instance& inst);

// Exhaustive oracle over all strictly-increasing-o subsets with an exact
// PTF ledger. Throws std::invalid_argument above 20 rides.
HitchPlan brute_force_optimal(const Instance& inst);

}  // namespace hitch
