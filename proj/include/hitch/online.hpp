#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hitch/core.hpp"
#include "hitch/types.hpp"

namespace hitch {

enum class Mode { kFlying, kWaiting, kRiding, kDone };
const char* to_string(Mode mode);

struct TraceEvent {
  double t = 0;
  double x = 0;
  double p = 0;
  Mode mode = Mode::kFlying;  // mode entered at this event
  std::string event;
  int ride_id = -1;
};

struct SimulationTrace {
  std::vector<TraceEvent> events;
};

struct Decision {
  int ride_id = -1;
  double time = 0;
  bool accepted = false;
  // Indicator evaluations; -1 when not evaluated for this decision.
  int rc = -1;
  int aa = -1;
  int cs = -1;
  std::string note;
};

// An accepted ride with both power ledgers. p_formula is the accepted-set
// attribute (from-origin balance for the first ride, then the power
// transfer function down the chain); p_realized is the energy the UAV
// actually holds at boarding. They differ only when the ride was accepted
// behind the UAV's current position.
struct AcceptedRide {
  RideTrip ride;
  double p_formula = 0;
  double p_realized = 0;
  bool taken = false;
};

struct UavState {
  double u_time = 0;
  double location = 0;
  double power = 0;
  Mode mode = Mode::kWaiting;
  bool stopped_accepting = false;
  std::vector<AcceptedRide> accepted;  // sorted by start location
};

struct Verdict {
  bool accept = false;
  int rc = -1;
  int aa = -1;
  int cs = -1;
};

// Invoked exactly once per ride at its release time; decisions are
// irrevocable. Policies see only the state view and the released ride.
struct OnlinePolicy {
  virtual ~OnlinePolicy() = default;
  virtual Verdict decide(const UavState& state, const RideTrip& ride,
                         const UavConfig& cfg) = 0;
  virtual std::string name() const = 0;
};

// Feasibility of inserting a ride into the accepted chain.
struct InsertCheck {
  bool has_left = false;
  bool has_right = false;
  bool duplicate_o = false;   // start location collides with an accepted ride
  bool formula_ok = false;    // time/power clauses on the accepted-set ledger
  bool realized_ok = false;   // boardable from the realized state
};
InsertCheck check_insert(const UavState& state, const RideTrip& ride,
                         const UavConfig& cfg);

// Stop-accepting predicate evaluated on the current state (the kernel
// latches it: once true, acceptance stays closed).
bool stop_condition(const UavState& state, const UavConfig& cfg);

struct PolicyViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts a new ride iff both ride-compatibility (against the nearest
// accepted ride below, or the current trajectory when none) and
// arrival-ahead hold. In default mode candidates below an accepted ride's
// start location are rejected outright; flexible mode instead allows
// mid-chain insertion with a both-neighbor check.
struct MyopicPolicy : OnlinePolicy {
  bool flexible = false;
  explicit MyopicPolicy(bool flexible_mode = false) : flexible(flexible_mode) {}
  Verdict decide(const UavState& state, const RideTrip& ride,
                 const UavConfig& cfg) override;
  std::string name() const override {
    return flexible ? "myopic-flexible" : "myopic";
  }
};

// Myopic plus the conditional-start indicator. Requires a fixed-delta-t
// instance; throws ConfigError otherwise.
struct AdaptivePolicy : OnlinePolicy {
  double dt;
  explicit AdaptivePolicy(double fixed_dt) : dt(fixed_dt) {}
  Verdict decide(const UavState& state, const RideTrip& ride,
                 const UavConfig& cfg) override;
  std::string name() const override { return "adaptive"; }
};

struct RejectAllPolicy : OnlinePolicy {
  Verdict decide(const UavState&, const RideTrip&, const UavConfig&) override {
    return {};
  }
  std::string name() const override { return "reject-all"; }
};

// Takes everything the kernel can realize; no arrival-ahead screening.
struct AcceptSafePolicy : OnlinePolicy {
  Verdict decide(const UavState& state, const RideTrip& ride,
                 const UavConfig& cfg) override;
  std::string name() const override { return "accept-safe"; }
};

struct SimResult {
  HitchPlan plan;  // de-jure plan (formula ledger); passes validate_plan
  SimulationTrace trace;
  std::vector<Decision> decisions;
  double realized_arrival = 0;
};

// Pull-based ride source. next() is called only after every earlier
// release has been decided, so implementations may branch on verdicts.
// Releases must be non-decreasing in time.
struct RideFeed {
  virtual ~RideFeed() = default;
  virtual std::optional<RideTrip> next(const std::vector<Decision>& decisions,
                                       const UavState& state) = 0;
};

SimResult simulate(const Instance& inst, OnlinePolicy& policy);
SimResult simulate(const UavConfig& cfg, RideFeed& feed, OnlinePolicy& policy,
                   std::vector<RideTrip>* materialized = nullptr);

}  // namespace hitch
