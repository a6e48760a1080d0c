#pragma once

#include <map>
#include <string>
#include <vector>

namespace hitch {

// Units: km, hours, km/h, abstract energy. 64-bit floats throughout.
inline constexpr double kEpsTime = 1e-9;
inline constexpr double kEpsPow = 1e-9;

// World and UAV parameters. Valid configs satisfy a > 0, v0 > 0,
// 0 < alpha < beta and 0 <= p0 < (beta - alpha) * a / v0 (otherwise the
// UAV could fly to the target without ever hitching).
struct UavConfig {
  double a = 0;      // path length |OA|
  double v0 = 0;     // UAV max speed
  double alpha = 0;  // charge rate
  double beta = 0;   // consumption rate while flying
  double p0 = 0;     // energy at time 0
};

// One truck trip. Released at r, departs o at time t, arrives d at
// t + (d - o) / v.
struct RideTrip {
  double r = 0;
  double t = 0;
  double o = 0;
  double d = 0;
  double v = 0;
  int id = -1;

  double duration() const { return v > 0 ? (d - o) / v : 0.0; }
  double delta_t() const { return t - r; }
};

// The virtual origin ride V0 = (0,0,0,0,0).
inline RideTrip origin_ride() { return RideTrip{0, 0, 0, 0, 0, -1}; }

struct Instance {
  UavConfig config;
  std::vector<RideTrip> rides;  // array order is release order
  std::map<std::string, std::string> metadata;
};

// Derived quantities for a config and a minimum ride velocity.
struct DerivedQuantities {
  double t_ru = 0;      // recharge time per unit distance of constant flight
  double t_mu = 0;      // move-one-unit time starting from empty
  double t_f0 = 0;      // constant-flight time until first exhaustion
  double t_ra = 0;      // stop-and-recharge duration to finish with no rides
  double l_f = 0;       // furthest point reachable by constant flight
  double xi_empty = 0;  // arrival time with no rides taken
  double l_min = 0;     // minimum ride-saved length avoiding any recharge stop
  double v_min = 0;
};

struct WaitInterval {
  double location = 0;
  double start = 0;
  double duration = 0;
};

// An ordered sequence of taken rides with its power ledger. `taken` is
// sorted by strictly increasing start location; power_at_start[i] is the
// energy held when boarding taken[i].
struct HitchPlan {
  std::vector<RideTrip> taken;
  std::vector<double> power_at_start;
  double total_fly_distance = 0;
  double arrival_time = 0;
  std::vector<WaitInterval> wait_schedule;
  std::vector<int> skipped_rides;
};

enum class ViolationKind {
  kNone,
  kOrdering,
  kTimeIncompat,
  kPowerNegative,
  kLedgerMismatch,
  kArrivalMismatch,
};

const char* to_string(ViolationKind kind);

struct ValidationReport {
  bool ok = true;
  ViolationKind kind = ViolationKind::kNone;
  int index = -1;  // ride index of the first violation, when applicable
  std::string message;
};

}  // namespace hitch
