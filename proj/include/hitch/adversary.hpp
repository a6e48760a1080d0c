#pragma once

#include <cstdint>
#include <stdexcept>

#include "hitch/offline.hpp"
#include "hitch/online.hpp"

namespace hitch {

enum class AdversaryPhase { kHook, kCase11, kCase12, kCase2, kDone };
const char* to_string(AdversaryPhase phase);

struct AdversaryOutcome {
  Instance instance;  // the materialized stream
  SimResult alg;      // the policy's live run against it
  HitchPlan opt;      // offline optimum on the same instance
  double ratio = 0;   // realized alg arrival over opt arrival
  AdversaryPhase phase = AdversaryPhase::kDone;
};

struct AdversaryPrecondition : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateBound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Plays the hook-ride game against the policy: releases the hook
// (0, T_f0, l_f, l_f+1, v), watches the verdict through a live simulation,
// then releases the matching punishment case. Requires a > l_f + ceil(L_min)
// and eps >= 1/v0.
AdversaryOutcome adversarial_stream(const UavConfig& cfg, double v, double eps,
                                    OnlinePolicy& policy);

// Closed-form bounds. v is the minimum ride velocity.
double lower_bound_value(const UavConfig& cfg, double v);
double myopic_upper_bound(const UavConfig& cfg, double v);
double adaptive_upper_bound(const UavConfig& cfg, double v, double dt);

struct DtMode {
  bool fixed = false;
  double dt = 0;
  static DtMode fixed_at(double dt) { return {true, dt}; }
  static DtMode flexible() { return {false, 0}; }
};

// Seeded, reproducible instance. Ride velocities are drawn from
// [v_lo, v_hi]; defaults are [0.3, 0.9] * v0. Pass v_lo == v_hi for a
// uniform-velocity family.
Instance random_instance(uint64_t seed, int n, const UavConfig& cfg,
                         DtMode mode, double v_lo = -1, double v_hi = -1);

// The defect instance of the myopic algorithm (a backtrack hook released
// mid-flight) followed by a forward chain it can no longer reach.
Instance defect_instance(const UavConfig& cfg, double v, double eps,
                         double dt, int chain_len = 6);

}  // namespace hitch
