#include "hitch/online.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

namespace hitch {

const char* to_string(Mode mode) {
  switch (mode) {
    case Mode::kFlying: return "flying";
    case Mode::kWaiting: return "waiting";
    case Mode::kRiding: return "riding";
    case Mode::kDone: return "done";
  }
  return "?";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

size_t pending_begin(const std::vector<AcceptedRide>& accepted) {
  size_t i = 0;
  while (i < accepted.size() && accepted[i].taken) ++i;
  return i;
}

std::vector<RideTrip> accepted_trips(const UavState& state) {
  std::vector<RideTrip> trips;
  trips.reserve(state.accepted.size());
  for (const AcceptedRide& ar : state.accepted) trips.push_back(ar.ride);
  return trips;
}

// Arrival-ahead indicator: taking the ride must not increase the formula
// arrival time of the accepted set.
bool arrival_ahead(const UavState& state, const RideTrip& ride,
                   const UavConfig& cfg) {
  std::vector<RideTrip> cur = accepted_trips(state);
  const double xi_cur = arrival_time_plan(cur, cfg);
  auto pos = std::find_if(cur.begin(), cur.end(), [&](const RideTrip& r) {
    return r.o >= ride.o;
  });
  cur.insert(pos, ride);
  return arrival_time_plan(cur, cfg) <= xi_cur + kEpsTime;
}

}  // namespace

bool stop_condition(const UavState& state, const UavConfig& cfg) {
  if (state.accepted.empty()) {
    const double t_ra = arrival_time_empty(cfg) - cfg.a / cfg.v0;
    return state.u_time >= t_ra - kEpsTime;
  }
  const AcceptedRide& last = state.accepted.back();
  const RideTrip& ride = last.ride;
  const double p_tilde = last.p_formula + cfg.alpha * ride.duration();
  const double t_off = ride.t + ride.duration();
  const double tail_need = (cfg.a - ride.d) / cfg.v0 * (cfg.beta - cfg.alpha);
  const double d1 = std::max(
      (cfg.beta / cfg.alpha - 1.0) * (cfg.a - ride.d) / cfg.v0 -
          p_tilde / cfg.alpha,
      t_off);
  if (state.u_time >= d1 - kEpsTime) return true;
  return p_tilde >= tail_need - kEpsPow && state.u_time < t_off;
}

InsertCheck check_insert(const UavState& state, const RideTrip& ride,
                         const UavConfig& cfg) {
  InsertCheck chk;
  const auto& acc = state.accepted;
  size_t pos = 0;
  while (pos < acc.size() && acc[pos].ride.o < ride.o) ++pos;
  if (pos < acc.size() && acc[pos].ride.o == ride.o) {
    chk.duplicate_o = true;
    return chk;
  }
  chk.has_left = pos > 0;
  chk.has_right = pos < acc.size();

  // Accepted-set ledger clauses: time and power compatibility against the
  // nearest accepted ride below (the from-origin balance when none), plus
  // the chain above when present.
  bool formula;
  double p_formula;
  if (chk.has_left) {
    const AcceptedRide& left = acc[pos - 1];
    formula = compatible(left.ride, left.p_formula, ride, cfg);
    p_formula = power_transfer(left.p_formula, left.ride, ride, cfg);
  } else {
    const RideTrip origin = origin_ride();
    formula = compatible(origin, cfg.p0, ride, cfg);
    p_formula = power_transfer(cfg.p0, origin, ride, cfg);
  }
  if (formula && chk.has_right) {
    formula = time_compatible(ride, acc[pos].ride, cfg);
    double p = p_formula;
    const RideTrip* prev = &ride;
    for (size_t k = pos; formula && k < acc.size(); ++k) {
      p = power_transfer(p, *prev, acc[k].ride, cfg);
      if (p < -kEpsPow) formula = false;
      prev = &acc[k].ride;
    }
  }
  chk.formula_ok = formula;

  // Realized clauses: the ride must be boardable on the trajectory the
  // UAV is actually on. A ride currently being ridden cannot be preceded.
  const size_t pend = pending_begin(acc);
  const bool riding_front =
      state.mode == Mode::kRiding && pend < acc.size();
  const size_t floor_pos = pend + (riding_front ? 1 : 0);
  if (pos < floor_pos) {
    chk.realized_ok = false;
    return chk;
  }
  bool realized;
  double p_real;
  if (pos == pend && !riding_front) {
    const double dist = std::abs(ride.o - state.location);
    realized = ride.t >= state.u_time + dist / cfg.v0 - kEpsTime;
    p_real = state.power + (ride.t - state.u_time) * cfg.alpha -
             dist * cfg.beta / cfg.v0;
  } else {
    const AcceptedRide& left = acc[pos - 1];
    realized = time_compatible(left.ride, ride, cfg);
    p_real = power_transfer(left.p_realized, left.ride, ride, cfg);
  }
  if (p_real < -kEpsPow) realized = false;
  if (realized && chk.has_right) {
    realized = time_compatible(ride, acc[pos].ride, cfg);
    double p = p_real;
    const RideTrip* prev = &ride;
    for (size_t k = pos; realized && k < acc.size(); ++k) {
      p = power_transfer(p, *prev, acc[k].ride, cfg);
      if (p < -kEpsPow) realized = false;
      prev = &acc[k].ride;
    }
  }
  chk.realized_ok = realized;
  return chk;
}

Verdict MyopicPolicy::decide(const UavState& state, const RideTrip& ride,
                             const UavConfig& cfg) {
  const InsertCheck chk = check_insert(state, ride, cfg);
  Verdict v;
  bool rc = chk.formula_ok && chk.realized_ok && !chk.duplicate_o;
  if (!flexible && chk.has_right) rc = false;
  v.rc = rc ? 1 : 0;
  v.aa = arrival_ahead(state, ride, cfg) ? 1 : 0;
  v.accept = rc && v.aa == 1;
  return v;
}

Verdict AdaptivePolicy::decide(const UavState& state, const RideTrip& ride,
                               const UavConfig& cfg) {
  if (std::abs(ride.delta_t() - dt) > kEpsTime)
    throw ConfigError("adaptive policy configured for delta_t = " +
                      std::to_string(dt) + " but ride " +
                      std::to_string(ride.id) + " has delta_t = " +
                      std::to_string(ride.delta_t()));
  const InsertCheck chk = check_insert(state, ride, cfg);
  Verdict v;
  bool rc = chk.formula_ok && chk.realized_ok && !chk.duplicate_o &&
            !chk.has_right;
  v.rc = rc ? 1 : 0;
  v.aa = arrival_ahead(state, ride, cfg) ? 1 : 0;
  const double t_f0 = cfg.p0 / (cfg.beta - cfg.alpha);
  const double l_f = t_f0 * cfg.v0;
  const double base =
      state.u_time <= t_f0 + kEpsTime ? state.location : l_f;
  v.cs = ride.o >= base + dt * cfg.v0 / 2.0 - kEpsPow ? 1 : 0;
  v.accept = rc && v.aa == 1 && v.cs == 1;
  return v;
}

Verdict AcceptSafePolicy::decide(const UavState& state, const RideTrip& ride,
                                 const UavConfig& cfg) {
  const InsertCheck chk = check_insert(state, ride, cfg);
  Verdict v;
  v.rc = chk.formula_ok && chk.realized_ok && !chk.duplicate_o ? 1 : 0;
  v.accept = v.rc == 1;
  return v;
}

namespace {

// Event-driven executor. Movement between events is piecewise linear:
// just-in-time boarding of the next pending ride, otherwise the default
// route (fly forward until the power is gone, recharge, fly to A once the
// remaining stretch is affordable).
class Kernel {
 public:
  explicit Kernel(const UavConfig& cfg) : cfg_(cfg) {
    state_.power = cfg.p0;
    state_.mode = cfg.p0 > 0 ? Mode::kFlying : Mode::kWaiting;
    t_ra_ = arrival_time_empty(cfg) - cfg.a / cfg.v0;
    latch_time_ = t_ra_;
    emit("start", -1);
  }

  void process_release(const RideTrip& ride, OnlinePolicy& policy) {
    if (ride.r < state_.u_time - kEpsTime)
      throw std::logic_error("ride releases must be non-decreasing in time");
    advance_to(std::max(ride.r, state_.u_time));
    emit("release", ride.id);

    Decision dec;
    dec.ride_id = ride.id;
    dec.time = state_.u_time;
    if (state_.mode == Mode::kDone) {
      dec.note = "arrived";
      emit("reject", ride.id);
    } else if (latched_) {
      dec.note = "stopped_accepting";
      emit("reject", ride.id);
    } else {
      const Verdict v = policy.decide(state_, ride, cfg_);
      dec.rc = v.rc;
      dec.aa = v.aa;
      dec.cs = v.cs;
      if (v.accept) {
        accept(ride, policy.name());
        dec.accepted = true;
        emit("accept", ride.id);
        maybe_latch();
      } else {
        emit("reject", ride.id);
      }
    }
    decisions_.push_back(dec);
  }

  void finish() { advance_to(kInf); }

  SimResult result() && {
    SimResult res;
    std::vector<RideTrip> trips = accepted_trips(state_);
    res.plan = make_plan(trips, cfg_);
    res.trace.events = std::move(trace_);
    res.decisions = std::move(decisions_);
    res.realized_arrival = arrival_;
    return res;
  }

  const UavState& state() const { return state_; }
  const std::vector<Decision>& decisions() const { return decisions_; }

 private:
  void emit(const char* event, int ride_id) {
    trace_.push_back({state_.u_time, state_.location, state_.power,
                      state_.mode, event, ride_id});
  }

  void set_mode(Mode mode, const char* event, int ride_id = -1) {
    if (state_.mode != mode) {
      state_.mode = mode;
      emit(event, ride_id);
    }
  }

  // Linear stretch: dt hours at the given velocity and power slope.
  void drift(double dt, double velocity, double power_rate) {
    state_.u_time += dt;
    state_.location += velocity * dt;
    state_.power += power_rate * dt;
  }

  void accept(const RideTrip& ride, const std::string& policy_name) {
    const InsertCheck chk = check_insert(state_, ride, cfg_);
    if (chk.duplicate_o || !chk.realized_ok)
      throw PolicyViolation(
          policy_name + " accepted ride " + std::to_string(ride.id) +
          ", which is not boardable from the realized state");
    auto pos = std::find_if(
        state_.accepted.begin(), state_.accepted.end(),
        [&](const AcceptedRide& ar) { return ar.ride.o > ride.o; });
    state_.accepted.insert(pos, AcceptedRide{ride, 0, 0, false});
    recompute_ledgers();
    refresh_latch_time();
  }

  void recompute_ledgers() {
    auto& acc = state_.accepted;
    RideTrip prev = origin_ride();
    double p = cfg_.p0;
    for (AcceptedRide& ar : acc) {
      p = power_transfer(p, prev, ar.ride, cfg_);
      ar.p_formula = p;
      prev = ar.ride;
    }
    size_t k = pending_begin(acc);
    if (k == acc.size()) return;
    if (state_.mode == Mode::kRiding) {
      ++k;  // the ride on board keeps its boarding value
    } else {
      const double dist = std::abs(acc[k].ride.o - state_.location);
      acc[k].p_realized = state_.power +
                          (acc[k].ride.t - state_.u_time) * cfg_.alpha -
                          dist * cfg_.beta / cfg_.v0;
      ++k;
    }
    for (; k < acc.size(); ++k)
      acc[k].p_realized = power_transfer(
          acc[k - 1].p_realized, acc[k - 1].ride, acc[k].ride, cfg_);
  }

  // Earliest time the stop predicate holds for the current accepted set.
  void refresh_latch_time() {
    if (latched_) return;
    if (state_.accepted.empty()) {
      latch_time_ = t_ra_;
      return;
    }
    const AcceptedRide& last = state_.accepted.back();
    const RideTrip& ride = last.ride;
    const double p_tilde = last.p_formula + cfg_.alpha * ride.duration();
    const double t_off = ride.t + ride.duration();
    const double tail_need =
        (cfg_.a - ride.d) / cfg_.v0 * (cfg_.beta - cfg_.alpha);
    const double d1 = std::max(
        (cfg_.beta / cfg_.alpha - 1.0) * (cfg_.a - ride.d) / cfg_.v0 -
            p_tilde / cfg_.alpha,
        t_off);
    if (p_tilde >= tail_need - kEpsPow && state_.u_time < t_off)
      latch_time_ = state_.u_time;
    else
      latch_time_ = d1;
  }

  void maybe_latch() {
    if (!latched_ && state_.u_time >= latch_time_ - kEpsTime) {
      latched_ = true;
      state_.stopped_accepting = true;
      emit("stop_accepting", -1);
    }
  }

  // Advances to `target` (or to arrival, whichever is first), emitting
  // trace events at every boundary crossed on the way.
  void advance_to(double target) {
    maybe_latch();
    int guard = 0;
    while (state_.u_time < target - kEpsTime) {
      if (state_.mode == Mode::kDone) {
        if (std::isfinite(target)) state_.u_time = target;
        return;
      }
      if (++guard > 1'000'000)
        throw std::logic_error("simulation failed to make progress");
      double bound = target;
      if (!latched_ && latch_time_ > state_.u_time && latch_time_ < bound)
        bound = latch_time_;
      step_to(bound);
      maybe_latch();
    }
  }

  // One movement segment, never past `bound`.
  void step_to(double bound) {
    auto& acc = state_.accepted;
    const size_t pend = pending_begin(acc);

    if (state_.mode == Mode::kRiding) {
      AcceptedRide& cur = acc[pend];
      const double t_off = cur.ride.t + cur.ride.duration();
      const double t_stop = std::min(t_off, bound);
      drift(t_stop - state_.u_time, cur.ride.v, cfg_.alpha);
      if (t_stop >= t_off - kEpsTime) {
        state_.u_time = t_off;
        state_.location = cur.ride.d;
        cur.taken = true;
        state_.mode = Mode::kWaiting;
        emit("alight", cur.ride.id);
      }
      return;
    }

    if (pend < acc.size()) {
      // Just-in-time boarding of the next pending ride: recharge in place,
      // then fly so as to land exactly at its departure.
      AcceptedRide& nxt = acc[pend];
      const double dist = std::abs(nxt.ride.o - state_.location);
      const double t_dep = nxt.ride.t - dist / cfg_.v0;
      if (state_.u_time < t_dep - kEpsTime) {
        set_mode(Mode::kWaiting, "wait");
        const double t_stop = std::min(t_dep, bound);
        drift(t_stop - state_.u_time, 0.0, cfg_.alpha);
        return;
      }
      if (state_.u_time < nxt.ride.t - kEpsTime) {
        set_mode(Mode::kFlying, "fly");
        const double dir = nxt.ride.o >= state_.location ? 1.0 : -1.0;
        const double t_stop = std::min(nxt.ride.t, bound);
        drift(t_stop - state_.u_time, dir * cfg_.v0,
              cfg_.alpha - cfg_.beta);
        return;
      }
      // Boarding instant. A ride interrupts any recharge stop.
      state_.u_time = nxt.ride.t;
      state_.location = nxt.ride.o;
      assert(std::abs(state_.power - nxt.p_realized) < 1e-6);
      state_.power = nxt.p_realized;
      state_.mode = Mode::kRiding;
      recharging_ = false;
      emit("board", nxt.ride.id);
      return;
    }

    // No pending rides: default route / final leg.
    const double tail_need =
        (cfg_.a - state_.location) / cfg_.v0 * (cfg_.beta - cfg_.alpha);
    if (state_.power >= tail_need - kEpsPow) {
      set_mode(Mode::kFlying, "fly");
      const double t_arr = state_.u_time + (cfg_.a - state_.location) / cfg_.v0;
      const double t_stop = std::min(t_arr, bound);
      drift(t_stop - state_.u_time, cfg_.v0, cfg_.alpha - cfg_.beta);
      if (t_stop >= t_arr - kEpsTime) {
        state_.u_time = t_arr;
        state_.location = cfg_.a;
        arrival_ = t_arr;
        state_.mode = Mode::kDone;
        emit("arrive", -1);
      }
      return;
    }
    if (!recharging_ && state_.power > kEpsPow) {
      set_mode(Mode::kFlying, "fly");
      const double t_exh =
          state_.u_time + state_.power / (cfg_.beta - cfg_.alpha);
      const double t_stop = std::min(t_exh, bound);
      drift(t_stop - state_.u_time, cfg_.v0, cfg_.alpha - cfg_.beta);
      if (t_stop >= t_exh - kEpsTime) {
        state_.u_time = t_exh;
        state_.power = 0;
        state_.mode = Mode::kWaiting;
        recharging_ = true;
        emit("exhaust", -1);
      }
      return;
    }
    // Stop-and-recharge, and stay put until the remaining stretch is
    // affordable in one constant flight.
    recharging_ = true;
    set_mode(Mode::kWaiting, "wait");
    const double t_able =
        state_.u_time + (tail_need - state_.power) / cfg_.alpha;
    const double t_stop = std::min(t_able, bound);
    drift(t_stop - state_.u_time, 0.0, cfg_.alpha);
  }

  UavConfig cfg_;
  UavState state_;
  std::vector<TraceEvent> trace_;
  std::vector<Decision> decisions_;
  bool latched_ = false;
  bool recharging_ = false;
  double latch_time_ = 0;
  double t_ra_ = 0;
  double arrival_ = 0;
};

struct VectorFeed : RideFeed {
  std::vector<RideTrip> rides;
  size_t next_idx = 0;
  explicit VectorFeed(const Instance& inst) : rides(inst.rides) {
    for (size_t i = 0; i < rides.size(); ++i)
      if (rides[i].id < 0) rides[i].id = static_cast<int>(i);
    std::stable_sort(rides.begin(), rides.end(),
                     [](const RideTrip& a, const RideTrip& b) {
                       if (a.r != b.r) return a.r < b.r;
                       return a.id < b.id;
                     });
    // With a fixed release gap, release order and departure order agree;
    // the boarding schedule relies on that, so verify it when it applies.
    bool fixed_dt = rides.size() > 1;
    for (size_t i = 1; fixed_dt && i < rides.size(); ++i)
      fixed_dt = std::abs(rides[i].delta_t() - rides[0].delta_t()) <= kEpsTime;
    if (fixed_dt)
      for (size_t i = 1; i < rides.size(); ++i)
        if (rides[i].t < rides[i - 1].t - kEpsTime)
          throw std::logic_error(
              "fixed delta-t instance violates release/departure agreement");
  }
  std::optional<RideTrip> next(const std::vector<Decision>&,
                               const UavState&) override {
    if (next_idx >= rides.size()) return std::nullopt;
    return rides[next_idx++];
  }
};

}  // namespace

SimResult simulate(const UavConfig& cfg, RideFeed& feed, OnlinePolicy& policy,
                   std::vector<RideTrip>* materialized) {
  Kernel kernel(cfg);
  while (true) {
    std::optional<RideTrip> ride = feed.next(kernel.decisions(), kernel.state());
    if (!ride) break;
    if (materialized) materialized->push_back(*ride);
    kernel.process_release(*ride, policy);
  }
  kernel.finish();
  return std::move(kernel).result();
}

SimResult simulate(const Instance& inst, OnlinePolicy& policy) {
  VectorFeed feed(inst);
  return simulate(inst.config, feed, policy, nullptr);
}

}  // namespace hitch
