#include "hitch/core.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hitch {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kNone: return "NONE";
    case ViolationKind::kOrdering: return "ORDERING";
    case ViolationKind::kTimeIncompat: return "TIME_INCOMPAT";
    case ViolationKind::kPowerNegative: return "POWER_NEGATIVE";
    case ViolationKind::kLedgerMismatch: return "LEDGER_MISMATCH";
    case ViolationKind::kArrivalMismatch: return "ARRIVAL_MISMATCH";
  }
  return "?";
}

double power_transfer(double p, const RideTrip& prev, const RideTrip& next,
                      const UavConfig& cfg) {
  return p + (next.t - prev.t) * cfg.alpha -
         std::abs(next.o - prev.d) * cfg.beta / cfg.v0;
}

double arrival_time_empty(const UavConfig& cfg) {
  return (cfg.beta / cfg.alpha) * (cfg.a / cfg.v0) - cfg.p0 / cfg.alpha;
}

double arrival_time_plan(std::span<const RideTrip> rides,
                         const UavConfig& cfg) {
  if (rides.empty()) return arrival_time_empty(cfg);
  double lambda = rides.front().o;
  for (size_t i = 0; i + 1 < rides.size(); ++i)
    lambda += std::abs(rides[i + 1].o - rides[i].d);
  const RideTrip& last = rides.back();
  lambda += cfg.a - last.d;
  const double budget_bound =
      lambda * cfg.beta / (cfg.alpha * cfg.v0) - cfg.p0 / cfg.alpha;
  const double last_bound =
      last.t + last.duration() + (cfg.a - last.d) / cfg.v0;
  return std::max(budget_bound, last_bound);
}

double arrival_time_last_ride(const RideTrip& last, double p_last,
                              const UavConfig& cfg) {
  const double tail = (cfg.a - last.d) / cfg.v0;
  const double p_off = p_last + cfg.alpha * last.duration();
  const double deficit = tail * (cfg.beta - cfg.alpha) - p_off;
  return last.t + last.duration() + tail +
         std::max(deficit, 0.0) / cfg.alpha;
}

bool time_compatible(const RideTrip& prev, const RideTrip& next,
                     const UavConfig& cfg) {
  return next.t >= prev.t + prev.duration() +
                       std::abs(next.o - prev.d) / cfg.v0 - kEpsTime;
}

bool compatible(const RideTrip& prev, double p_prev, const RideTrip& next,
                const UavConfig& cfg) {
  return time_compatible(prev, next, cfg) &&
         power_transfer(p_prev, prev, next, cfg) >= -kEpsPow;
}

DerivedQuantities derived_quantities(const UavConfig& cfg, double v_min) {
  if (v_min >= cfg.v0)
    throw std::invalid_argument("derived_quantities: v_min must be < v0");
  DerivedQuantities q;
  q.v_min = v_min;
  q.t_ru = (cfg.beta - cfg.alpha) / (cfg.alpha * cfg.v0);
  q.t_mu = cfg.beta / (cfg.alpha * cfg.v0);
  q.t_f0 = cfg.p0 / (cfg.beta - cfg.alpha);
  q.l_f = q.t_f0 * cfg.v0;
  q.xi_empty = arrival_time_empty(cfg);
  q.t_ra = q.xi_empty - cfg.a / cfg.v0;
  q.l_min = len_needed(0.0, cfg, v_min);
  return q;
}

double len_needed(double t_waited, const UavConfig& cfg, double v_min) {
  const double num = (cfg.a * cfg.beta - cfg.a * cfg.alpha -
                      cfg.p0 * cfg.v0 - cfg.v0 * t_waited * cfg.alpha) *
                     v_min;
  const double den =
      cfg.v0 * cfg.alpha - v_min * cfg.alpha + v_min * cfg.beta;
  return std::max(num / den, 0.0);
}

HitchPlan make_plan(std::span<const RideTrip> rides, const UavConfig& cfg) {
  HitchPlan plan;
  plan.taken.assign(rides.begin(), rides.end());
  if (rides.empty()) {
    plan.total_fly_distance = cfg.a;
    plan.arrival_time = arrival_time_empty(cfg);
    const double wait = plan.arrival_time - cfg.a / cfg.v0;
    if (wait > kEpsTime) {
      // Canonical no-ride route: fly to l_f, recharge there, fly on.
      const double t_f0 = cfg.p0 / (cfg.beta - cfg.alpha);
      plan.wait_schedule.push_back({t_f0 * cfg.v0, t_f0, wait});
    }
    return plan;
  }

  plan.power_at_start.reserve(rides.size());
  const RideTrip v0_ride = origin_ride();
  double p = power_transfer(cfg.p0, v0_ride, rides.front(), cfg);
  plan.power_at_start.push_back(p);
  double lambda = rides.front().o;
  {
    const double depart = rides.front().t - rides.front().o / cfg.v0;
    if (depart > kEpsTime) plan.wait_schedule.push_back({0.0, 0.0, depart});
  }
  for (size_t i = 0; i + 1 < rides.size(); ++i) {
    const RideTrip& cur = rides[i];
    const RideTrip& nxt = rides[i + 1];
    p = power_transfer(p, cur, nxt, cfg);
    plan.power_at_start.push_back(p);
    lambda += std::abs(nxt.o - cur.d);
    const double off = cur.t + cur.duration();
    const double depart = nxt.t - std::abs(nxt.o - cur.d) / cfg.v0;
    if (depart - off > kEpsTime)
      plan.wait_schedule.push_back({cur.d, off, depart - off});
  }
  const RideTrip& last = rides.back();
  lambda += cfg.a - last.d;
  plan.total_fly_distance = lambda;
  plan.arrival_time = arrival_time_plan(rides, cfg);
  const double p_off = p + cfg.alpha * last.duration();
  const double deficit =
      (cfg.a - last.d) / cfg.v0 * (cfg.beta - cfg.alpha) - p_off;
  if (deficit > kEpsPow)
    plan.wait_schedule.push_back(
        {last.d, last.t + last.duration(), deficit / cfg.alpha});
  return plan;
}

ValidationReport validate_plan(const HitchPlan& plan, const Instance& inst) {
  const UavConfig& cfg = inst.config;
  ValidationReport report;
  auto fail = [&report](ViolationKind kind, int index, std::string msg) {
    report.ok = false;
    report.kind = kind;
    report.index = index;
    report.message = std::move(msg);
    return report;
  };
  char buf[160];

  const auto& rides = plan.taken;
  for (size_t i = 0; i + 1 < rides.size(); ++i) {
    if (!(rides[i + 1].o > rides[i].o)) {
      std::snprintf(buf, sizeof buf,
                    "start locations not strictly increasing at position %zu",
                    i + 1);
      return fail(ViolationKind::kOrdering, static_cast<int>(i + 1), buf);
    }
  }
  if (!rides.empty()) {
    if (rides.front().t < rides.front().o / cfg.v0 - kEpsTime)
      return fail(ViolationKind::kTimeIncompat, 0,
                  "first ride departs before the UAV can reach it");
    for (size_t i = 0; i + 1 < rides.size(); ++i) {
      if (!time_compatible(rides[i], rides[i + 1], cfg)) {
        std::snprintf(buf, sizeof buf,
                      "transfer %zu -> %zu misses the departure time", i,
                      i + 1);
        return fail(ViolationKind::kTimeIncompat, static_cast<int>(i + 1),
                    buf);
      }
    }
  }

  if (plan.power_at_start.size() != rides.size())
    return fail(ViolationKind::kLedgerMismatch, -1,
                "ledger length does not match the number of rides");
  double p = cfg.p0;
  RideTrip prev = origin_ride();
  for (size_t i = 0; i < rides.size(); ++i) {
    p = power_transfer(p, prev, rides[i], cfg);
    if (p < -kEpsPow) {
      std::snprintf(buf, sizeof buf, "negative power %.12g boarding ride %zu",
                    p, i);
      return fail(ViolationKind::kPowerNegative, static_cast<int>(i), buf);
    }
    if (std::abs(p - plan.power_at_start[i]) > kEpsPow) {
      std::snprintf(buf, sizeof buf,
                    "ledger entry %zu is %.12g, recomputed %.12g", i,
                    plan.power_at_start[i], p);
      return fail(ViolationKind::kLedgerMismatch, static_cast<int>(i), buf);
    }
    prev = rides[i];
  }

  double lambda = cfg.a;
  if (!rides.empty()) {
    lambda = rides.front().o;
    for (size_t i = 0; i + 1 < rides.size(); ++i)
      lambda += std::abs(rides[i + 1].o - rides[i].d);
    lambda += cfg.a - rides.back().d;
  }
  if (std::abs(lambda - plan.total_fly_distance) > kEpsPow) {
    std::snprintf(buf, sizeof buf,
                  "total_fly_distance is %.12g, recomputed %.12g",
                  plan.total_fly_distance, lambda);
    return fail(ViolationKind::kLedgerMismatch, -1, buf);
  }

  const double xi = arrival_time_plan(rides, cfg);
  if (std::abs(xi - plan.arrival_time) > kEpsTime) {
    std::snprintf(buf, sizeof buf, "arrival_time is %.12g, recomputed %.12g",
                  plan.arrival_time, xi);
    return fail(ViolationKind::kArrivalMismatch, -1, buf);
  }
  return report;
}

std::vector<InstanceIssue> validate_instance(const Instance& inst) {
  std::vector<InstanceIssue> issues;
  const UavConfig& cfg = inst.config;
  auto bad = [&issues](const std::string& field, const std::string& msg,
                       bool hard = true) {
    issues.push_back({hard, field, msg});
  };
  char buf[160];

  if (!(cfg.a > 0)) bad("config.a", "path length must be positive");
  if (!(cfg.v0 > 0)) bad("config.v0", "UAV speed must be positive");
  if (!(cfg.alpha > 0)) bad("config.alpha", "charge rate must be positive");
  if (!(cfg.beta > cfg.alpha))
    bad("config.beta", "consumption rate must exceed the charge rate");
  if (!(cfg.p0 >= 0)) bad("config.p0", "initial power must be non-negative");
  if (cfg.a > 0 && cfg.v0 > 0 && cfg.beta > cfg.alpha &&
      !(cfg.p0 < (cfg.beta - cfg.alpha) * cfg.a / cfg.v0)) {
    std::snprintf(buf, sizeof buf,
                  "p0 must be below (beta-alpha)*a/v0 = %.12g (otherwise the "
                  "trip is trivial)",
                  (cfg.beta - cfg.alpha) * cfg.a / cfg.v0);
    bad("config.p0", buf);
  }
  if (!issues.empty()) return issues;  // ride checks need a sane config

  const double t_ra = arrival_time_empty(cfg) - cfg.a / cfg.v0;
  const double dt_max = t_ra + cfg.p0 / (cfg.beta - cfg.alpha);
  for (size_t i = 0; i < inst.rides.size(); ++i) {
    const RideTrip& ride = inst.rides[i];
    auto field = [i](const char* name) {
      return "rides[" + std::to_string(i) + "]." + name;
    };
    if (!(ride.r >= 0)) bad(field("r"), "release time must be non-negative");
    if (!(ride.t >= ride.r))
      bad(field("t"), "departure must not precede release");
    if (!(ride.o >= 0)) bad(field("o"), "start location must be in [0, a)");
    if (!(ride.d > ride.o))
      bad(field("d"), "end location must exceed start location");
    if (!(ride.d <= cfg.a)) bad(field("d"), "end location must be <= a");
    if (!(ride.v > 0)) bad(field("v"), "velocity must be positive");
    if (!(ride.v < cfg.v0)) bad(field("v"), "velocity must be below v0");
    if (ride.delta_t() > dt_max + kEpsTime) {
      std::snprintf(buf, sizeof buf,
                    "delta_t %.12g exceeds T_ra + T_f0 = %.12g; the ride can "
                    "never be worth taking",
                    ride.delta_t(), dt_max);
      bad(field("t"), buf, /*hard=*/false);
    }
  }
  return issues;
}

double safe_ceil(double x) { return std::ceil(x - kEpsTime); }
double safe_floor(double x) { return std::floor(x + kEpsTime); }

}  // namespace hitch
