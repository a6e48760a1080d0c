#pragma once

#include <span>
#include <string>
#include <vector>

#include "hitch/types.hpp"

namespace hitch {

// Energy held at next.t when transferring from prev to next: charge at
// alpha over the whole gap, pay beta/v0 per km of transfer flight. May be
// negative, which signals an infeasible transfer to the caller.
double power_transfer(double p, const RideTrip& prev, const RideTrip& next,
                      const UavConfig& cfg);

// Arrival time at A when no ride is taken.
double arrival_time_empty(const UavConfig& cfg);

// Arrival time for an o-sorted ride sequence: the larger of the
// energy-budget bound and the last ride's completion-plus-flight time.
// Pure formula; does not check pairwise feasibility.
double arrival_time_plan(std::span<const RideTrip> rides, const UavConfig& cfg);

// Arrival time expressed through the last ride only, given the energy
// p_last held at its departure. The on-ride recharge enters as
// alpha * (d - o) / v so this agrees with arrival_time_plan on any plan
// whose ledger was built by power_transfer.
double arrival_time_last_ride(const RideTrip& last, double p_last,
                              const UavConfig& cfg);

// Pairwise compatibility: next can be boarded after finishing prev.
// prev may be the virtual origin ride (p_prev = P0).
bool compatible(const RideTrip& prev, double p_prev, const RideTrip& next,
                const UavConfig& cfg);
bool time_compatible(const RideTrip& prev, const RideTrip& next,
                     const UavConfig& cfg);

// All derived quantities. Throws std::invalid_argument if v_min >= v0.
DerivedQuantities derived_quantities(const UavConfig& cfg, double v_min);

// Least ride-saved length still needed after t_waited hours already spent
// recharging. Non-increasing, len_needed(0) = l_min, zero from t_ra on.
double len_needed(double t_waited, const UavConfig& cfg, double v_min);

// Builds a plan (ledger, lambda, arrival, canonical wait schedule) for an
// o-sorted ride sequence. The ledger starts from P0 at the origin; waits
// are placed at the previous drop-off so each ride is boarded exactly at
// its departure time.
HitchPlan make_plan(std::span<const RideTrip> rides, const UavConfig& cfg);

// Checks a plan against an instance's config: ordering, time constraints,
// PTF ledger, total flying distance, arrival time. Stops at the first
// violation.
ValidationReport validate_plan(const HitchPlan& plan, const Instance& inst);

struct InstanceIssue {
  bool hard = true;  // false for warning-level rejections (delta-t range)
  std::string field;
  std::string message;
};

// Structural checks on config and rides. Any returned issue (hard or
// warning-level) makes loaders reject the instance.
std::vector<InstanceIssue> validate_instance(const Instance& inst);

// Ceil/floor with a kEpsTime guard against representation noise.
double safe_ceil(double x);
double safe_floor(double x);

}  // namespace hitch
