#include "hitch/adversary.hpp"

#include <cmath>
#include <random>
#include <string>

namespace hitch {

const char* to_string(AdversaryPhase phase) {
  switch (phase) {
    case AdversaryPhase::kHook: return "hook";
    case AdversaryPhase::kCase11: return "hook_case_1_1";
    case AdversaryPhase::kCase12: return "hook_case_1_2";
    case AdversaryPhase::kCase2: return "hook_case_2";
    case AdversaryPhase::kDone: return "done";
  }
  return "?";
}

double lower_bound_value(const UavConfig& cfg, double v) {
  const DerivedQuantities dq = derived_quantities(cfg, v);
  const double tau = safe_ceil(dq.l_min);
  return (dq.xi_empty - dq.t_mu) /
         (tau / v + (cfg.a + 1 - tau) / cfg.v0);
}

double myopic_upper_bound(const UavConfig& cfg, double v) {
  const DerivedQuantities dq = derived_quantities(cfg, v);
  const double tau = safe_ceil(dq.l_min);
  const double denom = (cfg.a - tau) * dq.t_mu - cfg.p0 / cfg.alpha;
  if (denom <= kEpsTime)
    throw DegenerateBound(
        "myopic bound denominator (a - ceil(L_min)) * T_mu - P0/alpha is "
        "not positive");
  return dq.xi_empty / denom;
}

double adaptive_upper_bound(const UavConfig& cfg, double v, double dt) {
  const DerivedQuantities dq = derived_quantities(cfg, v);
  if (dt < -kEpsTime || dt > dq.t_ra + dq.t_f0 + kEpsTime)
    throw std::invalid_argument(
        "adaptive bound requires 0 <= dt <= T_ra + T_f0");
  const double len = len_needed(dt / 2.0, cfg, v);
  return dq.xi_empty /
         (dt / 2.0 + (cfg.a - len) / cfg.v0 + len / v);
}

namespace {

// Yields the hook, then branches on the observed verdict.
class AdversaryFeed : public RideFeed {
 public:
  AdversaryFeed(const UavConfig& cfg, double v, double eps)
      : cfg_(cfg), v_(v), eps_(eps), dq_(derived_quantities(cfg, v)) {
    tau_ = safe_ceil(dq_.l_min);
    sigma_ = safe_floor(dq_.l_f);
    if (!(tau_ >= 1))
      throw AdversaryPrecondition("ceil(L_min) must be at least 1");
    if (!(cfg.a > dq_.l_f + tau_))
      throw AdversaryPrecondition(
          "adversary requires a > l_f + ceil(L_min)");
    if (eps < 1.0 / cfg.v0 - kEpsTime)
      throw AdversaryPrecondition("adversary requires eps >= 1/v0");
  }

  AdversaryPhase phase() const { return phase_; }

  std::optional<RideTrip> next(const std::vector<Decision>& decisions,
                               const UavState&) override {
    if (phase_ == AdversaryPhase::kHook) {
      if (decisions.empty()) {
        return make_ride(0.0, dq_.t_f0, dq_.l_f, dq_.l_f + 1.0);
      }
      // Hook verdict observed; pick the punishment case.
      if (decisions.front().accepted) {
        if (tau_ >= sigma_ + 2) {
          phase_ = AdversaryPhase::kCase11;
          build_case_1_1();
        } else {
          phase_ = AdversaryPhase::kCase12;
          build_case_1_2();
        }
      } else {
        phase_ = AdversaryPhase::kCase2;
        build_case_2();
      }
    }
    if (queue_pos_ < queue_.size()) return queue_[queue_pos_++];
    return std::nullopt;
  }

 private:
  RideTrip make_ride(double r, double t, double o, double d) {
    RideTrip ride{r, t, o, d, v_, next_id_++};
    if (ride.d > cfg_.a + kEpsPow)
      throw AdversaryPrecondition(
          "adversary ride would end beyond the target; enlarge a");
    return ride;
  }

  // Head-to-tail unit rides covering [0, count] starting after eps.
  void push_head_chain(int count) {
    for (int i = 0; i < count; ++i) {
      const double t = eps_ + i / v_;
      queue_.push_back(make_ride(t, t, i, i + 1.0));
    }
  }

  void build_case_1_1() {
    push_head_chain(static_cast<int>(sigma_));
    const double t1 = eps_ + sigma_ / v_ + (dq_.l_f - sigma_) / cfg_.v0;
    queue_.push_back(make_ride(t1, t1, dq_.l_f, dq_.l_f + 1.0));
    const double p_opt = cfg_.p0 + (eps_ + (sigma_ + 1.0) / v_) * cfg_.alpha +
                         (cfg_.alpha - cfg_.beta) * (dq_.l_f - sigma_) /
                             cfg_.v0;
    const double glide = p_opt / (cfg_.beta - cfg_.alpha);  // exhausting hop
    const double base = dq_.l_f + 1.0 + glide * cfg_.v0;
    const int chain = static_cast<int>(tau_ - sigma_) - 1;
    for (int j = 0; j < chain; ++j) {
      const double r = t1 + 1.0 / v_ + j / v_;
      queue_.push_back(make_ride(r, r + glide, base + j, base + j + 1.0));
    }
  }

  void build_case_1_2() {
    push_head_chain(static_cast<int>(tau_) - 1);
    // Departure includes the flight leg from the chain's end to l_f.
    const double t2 = eps_ + (tau_ - 1.0) / v_ +
                      (dq_.l_f - (tau_ - 1.0)) / cfg_.v0;
    queue_.push_back(make_ride(t2, t2, dq_.l_f, dq_.l_f + 1.0));
  }

  void build_case_2() {
    if (cfg_.alpha * cfg_.v0 >= cfg_.beta * v_ - kEpsPow)
      throw AdversaryPrecondition(
          "case-2 stream requires alpha * v0 < beta * v so the follow-up "
          "chain is unreachable from scratch");
    for (int k = 2; k <= static_cast<int>(tau_); ++k) {
      const double t = dq_.t_f0 + (k - 1.0) / v_;
      queue_.push_back(make_ride(t, t, dq_.l_f + (k - 1.0), dq_.l_f + k));
    }
  }

  UavConfig cfg_;
  double v_;
  double eps_;
  DerivedQuantities dq_;
  double tau_ = 0;
  double sigma_ = 0;
  AdversaryPhase phase_ = AdversaryPhase::kHook;
  std::vector<RideTrip> queue_;
  size_t queue_pos_ = 0;
  int next_id_ = 0;
};

}  // namespace

AdversaryOutcome adversarial_stream(const UavConfig& cfg, double v,
                                    double eps, OnlinePolicy& policy) {
  AdversaryFeed feed(cfg, v, eps);
  AdversaryOutcome out;
  out.alg = simulate(cfg, feed, policy, &out.instance.rides);
  out.phase = feed.phase();
  out.instance.config = cfg;
  out.instance.metadata["generator"] = to_string(out.phase);
  out.instance.metadata["eps"] = std::to_string(eps);
  out.instance.metadata["policy"] = policy.name();
  out.opt = optimal_plan(out.instance);
  out.ratio = out.alg.realized_arrival / out.opt.arrival_time;
  return out;
}

namespace {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(uint64_t seed) : gen(seed) {}
  double uniform() { return (gen() >> 11) * 0x1.0p-53; }
  double range(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

}  // namespace

Instance random_instance(uint64_t seed, int n, const UavConfig& cfg,
                         DtMode mode, double v_lo, double v_hi) {
  if (v_lo < 0) v_lo = 0.3 * cfg.v0;
  if (v_hi < 0) v_hi = 0.9 * cfg.v0;
  if (!(v_lo > 0 && v_lo <= v_hi && v_hi < cfg.v0))
    throw std::invalid_argument(
        "random_instance: velocity range must sit inside (0, v0)");
  const double t_f0 = cfg.p0 / (cfg.beta - cfg.alpha);
  const double xi_empty = arrival_time_empty(cfg);
  const double dt_max = xi_empty - cfg.a / cfg.v0 + t_f0;
  if (mode.fixed && (mode.dt < 0 || mode.dt > dt_max + kEpsTime))
    throw std::invalid_argument(
        "random_instance: fixed dt must lie in [0, T_ra + T_f0]");

  Rng rng(seed);
  Instance inst;
  inst.config = cfg;
  inst.rides.reserve(n);
  for (int i = 0; i < n; ++i) {
    RideTrip ride;
    ride.o = rng.range(0.0, 0.85 * cfg.a);
    ride.d = ride.o + rng.range(0.001 * cfg.a,
                                std::min(0.3 * cfg.a, cfg.a - ride.o));
    ride.v = rng.range(v_lo, v_hi);
    const double dt = mode.fixed ? mode.dt : rng.range(0.0, dt_max);
    ride.r = rng.range(0.0, 0.9 * xi_empty);
    ride.t = ride.r + dt;
    inst.rides.push_back(ride);
  }
  std::stable_sort(inst.rides.begin(), inst.rides.end(),
                   [](const RideTrip& a, const RideTrip& b) {
                     return a.r < b.r;
                   });
  for (size_t i = 0; i < inst.rides.size(); ++i)
    inst.rides[i].id = static_cast<int>(i);

  inst.metadata["generator"] = "random";
  inst.metadata["seed"] = std::to_string(seed);
  inst.metadata["n"] = std::to_string(n);
  inst.metadata["dt_mode"] =
      mode.fixed ? "fixed:" + std::to_string(mode.dt) : "flexible";
  return inst;
}

Instance defect_instance(const UavConfig& cfg, double v, double eps,
                         double dt, int chain_len) {
  Instance inst;
  inst.config = cfg;
  const double r1 = 1.0 / (2.0 * cfg.v0);
  inst.rides.push_back({r1, r1 + dt, eps, 1.0 + eps, v, 0});

  // Forward chain placed just-in-time for the default route: each ride
  // departs while the hook-taker is still tied up behind it.
  const double r2 = r1 + 1.0 / cfg.v0;
  const double o2 = cfg.v0 * (r2 + dt);
  for (int j = 0; j < chain_len; ++j) {
    const double t = r2 + dt + j / v;
    RideTrip ride{t - dt, t, o2 + j, o2 + j + 1.0, v, j + 1};
    if (ride.d > cfg.a)
      throw std::invalid_argument("defect chain runs past the target");
    inst.rides.push_back(ride);
  }
  inst.metadata["generator"] = "defect";
  inst.metadata["eps"] = std::to_string(eps);
  inst.metadata["dt"] = std::to_string(dt);
  return inst;
}

}  // namespace hitch
