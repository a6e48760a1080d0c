#pragma once

#include <string>
#include <vector>

#include "hitch/online.hpp"
#include "hitch/types.hpp"

namespace hitch {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance JSON:
// {"config":{"a":..,"v0":..,"alpha":..,"beta":..,"p0":..},
//  "rides":[{"r":..,"t":..,"o":..,"d":..,"v":..},...],"metadata":{..}}
// Ride ids are assigned from array order (= release order).
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

// Bare config JSON ({"a":..,...}); also accepts a full instance object.
UavConfig parse_config(const std::string& text);

// Plan JSON: {"taken":[ids],"arrival_time":..,"ledger":[..],
//             "total_fly_distance":..,"waits":[..],"skipped":[ids]}
std::string serialize_plan(const HitchPlan& plan);

// Online result: plan plus embedded decision log and realized arrival.
std::string serialize_sim_result(const SimResult& res,
                                 const std::string& policy);

// One JSON object per line: {"t":..,"x":..,"p":..,"mode":..,"event":..}.
std::string serialize_trace(const SimulationTrace& trace);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace hitch
