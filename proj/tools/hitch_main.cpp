#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "hitch/adversary.hpp"
#include "hitch/bench.hpp"
#include "hitch/io.hpp"
#include "hitch/offline.hpp"
#include "hitch/online.hpp"

namespace {

using namespace hitch;

constexpr const char* kConfigHelp =
    "config JSON file {\"a\":..,\"v0\":..,\"alpha\":..,\"beta\":..,\"p0\":..}. "
    "Default: a=100 km, v0=100 km/h, alpha=10, beta=60, p0=20 (alpha is a "
    "free scale; 10 keeps p0 below (beta-alpha)*a/v0 = 50).";

UavConfig default_config() { return {100.0, 100.0, 10.0, 60.0, 20.0}; }

uint64_t default_seed() {
  if (const char* env = std::getenv("HITCH_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 1;
}

Instance load_checked_instance(const std::string& path) {
  const Instance inst = parse_instance(read_file(path));
  const auto issues = validate_instance(inst);
  if (!issues.empty()) {
    for (const InstanceIssue& issue : issues)
      std::cerr << (issue.hard ? "error: " : "warning: ") << issue.field
                << ": " << issue.message << "\n";
    throw std::runtime_error("instance failed validation");
  }
  return inst;
}

UavConfig load_config(const std::string& path) {
  if (path.empty()) return default_config();
  return parse_config(read_file(path));
}

std::unique_ptr<OnlinePolicy> make_policy(const std::string& name,
                                          double dt) {
  if (name == "myopic") return std::make_unique<MyopicPolicy>();
  if (name == "myopic-flexible")
    return std::make_unique<MyopicPolicy>(true);
  if (name == "adaptive") return std::make_unique<AdaptivePolicy>(dt);
  if (name == "reject-all") return std::make_unique<RejectAllPolicy>();
  if (name == "accept-safe") return std::make_unique<AcceptSafePolicy>();
  throw CLI::ValidationError("--policy", "unknown policy '" + name + "'");
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file(out_path, content);
}

int cmd_validate(const std::string& path) {
  const Instance inst = parse_instance(read_file(path));
  const auto issues = validate_instance(inst);
  for (const InstanceIssue& issue : issues)
    std::cout << (issue.hard ? "error: " : "warning: ") << issue.field
              << ": " << issue.message << "\n";
  if (!issues.empty()) return 1;
  std::cout << "ok: " << inst.rides.size() << " rides\n";
  return 0;
}

int cmd_offline(const std::string& path, bool oracle,
                const std::string& out_path) {
  const Instance inst = load_checked_instance(path);
  const HitchPlan plan = optimal_plan(inst);
  emit(out_path, serialize_plan(plan));
  if (oracle) {
    const HitchPlan reference = brute_force_optimal(inst);
    const double diff = std::abs(reference.arrival_time - plan.arrival_time);
    if (diff > kEpsTime) {
      std::cerr << "oracle disagrees: optimal " << plan.arrival_time
                << " vs brute force " << reference.arrival_time << "\n";
      return 1;
    }
    std::cerr << "arrival " << plan.arrival_time << ", oracle agrees\n";
  }
  return 0;
}

int cmd_online(const std::string& path, const std::string& policy_name,
               double dt, const std::string& trace_path,
               const std::string& out_path) {
  const Instance inst = load_checked_instance(path);
  auto policy = make_policy(policy_name, dt);
  const SimResult res = simulate(inst, *policy);
  emit(out_path, serialize_sim_result(res, policy->name()));
  if (!trace_path.empty()) write_file(trace_path, serialize_trace(res.trace));
  const ValidationReport report = validate_plan(res.plan, inst);
  if (!report.ok) {
    std::cerr << "realized plan failed validation: "
              << to_string(report.kind) << ": " << report.message << "\n";
    return 1;
  }
  return 0;
}

int cmd_adversary(const std::string& config_path,
                  const std::string& policy_name, double dt, double v,
                  double eps, const std::string& instance_out,
                  const std::string& trace_path) {
  const UavConfig cfg = load_config(config_path);
  auto policy = make_policy(policy_name, dt);
  if (eps <= 0) eps = 1.0 / cfg.v0 + 1e-6;
  const AdversaryOutcome out = adversarial_stream(cfg, v, eps, *policy);
  if (!instance_out.empty())
    write_file(instance_out, serialize_instance(out.instance));
  if (!trace_path.empty())
    write_file(trace_path, serialize_trace(out.alg.trace));
  std::cout << "case: " << to_string(out.phase) << "\n"
            << "rides: " << out.instance.rides.size() << "\n"
            << "alg_arrival: " << out.alg.realized_arrival << "\n"
            << "opt_arrival: " << out.opt.arrival_time << "\n"
            << "ratio: " << out.ratio << "\n"
            << "lower_bound: " << lower_bound_value(cfg, v) << "\n";
  return 0;
}

int cmd_sweep(const std::string& config_path, double v,
              const std::string& grid_text, int n_instances, int n_rides,
              uint64_t seed, const std::string& out_path) {
  const UavConfig cfg = load_config(config_path);
  std::vector<double> grid;
  size_t pos = 0;
  while (pos < grid_text.size()) {
    size_t comma = grid_text.find(',', pos);
    if (comma == std::string::npos) comma = grid_text.size();
    grid.push_back(std::stod(grid_text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  if (grid.empty()) throw CLI::ValidationError("--dt-grid", "empty grid");
  const SweepReport report =
      run_sweep(cfg, v, grid, n_instances, n_rides, seed);
  emit(out_path, sweep_to_csv(report));
  return 0;
}

int cmd_gen(const std::string& config_path, int n, uint64_t seed, double dt,
            bool flexible, double v_lo, double v_hi,
            const std::string& out_path) {
  const UavConfig cfg = load_config(config_path);
  const DtMode mode = flexible ? DtMode::flexible() : DtMode::fixed_at(dt);
  const Instance inst = random_instance(seed, n, cfg, mode, v_lo, v_hi);
  emit(out_path, serialize_instance(inst));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"UAV ride-hitching toolkit: offline optimum, online policies, "
               "adversarial streams and bound sweeps"};
  app.require_subcommand(1);

  std::string path, config_path, out_path, trace_path;
  std::string policy_name = "myopic";
  std::string grid_text = "0.5,1,2,3";
  bool oracle = false, flexible = false;
  double dt = 1.0, v = 60.0, eps = -1.0, v_lo = -1.0, v_hi = -1.0;
  int n = 10, n_instances = 20;
  uint64_t seed = default_seed();

  CLI::App* validate = app.add_subcommand("validate", "check an instance file");
  validate->add_option("instance", path, "instance JSON")->required();

  CLI::App* offline = app.add_subcommand("offline", "optimal offline plan");
  offline->add_option("instance", path, "instance JSON")->required();
  offline->add_flag("--oracle", oracle,
                    "cross-check against exhaustive search (<= 20 rides)");
  offline->add_option("--out", out_path, "write plan JSON here");

  CLI::App* online = app.add_subcommand("online", "simulate an online policy");
  online->add_option("instance", path, "instance JSON")->required();
  online->add_option("--policy", policy_name,
                     "myopic | myopic-flexible | adaptive | reject-all | "
                     "accept-safe");
  online->add_option("--dt", dt, "fixed delta-t (adaptive policy)");
  online->add_option("--trace", trace_path, "write JSON-lines trace here");
  online->add_option("--out", out_path, "write plan+decisions JSON here");

  CLI::App* adversary =
      app.add_subcommand("adversary", "run the hook-ride adversary");
  adversary->add_option("--config", config_path, kConfigHelp);
  adversary->add_option("--policy", policy_name, "policy under attack");
  adversary->add_option("--dt", dt, "fixed delta-t (adaptive policy)");
  adversary->add_option("--v", v, "ride velocity");
  adversary->add_option("--eps", eps, "hook-to-chain delay (default 1/v0+1e-6)");
  adversary->add_option("--out", out_path, "write the materialized instance");
  adversary->add_option("--trace", trace_path, "write the policy's trace");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "bound and empirical-ratio sweep over a delta-t grid");
  sweep->add_option("--config", config_path, kConfigHelp);
  sweep->add_option("--v", v, "ride velocity");
  sweep->add_option("--dt-grid", grid_text, "comma-separated delta-t values");
  sweep->add_option("--seeds", n_instances, "instances per grid cell");
  sweep->add_option("--n", n, "rides per instance");
  sweep->add_option("--seed", seed, "base seed (HITCH_SEED overrides default)");
  sweep->add_option("--out", out_path, "write CSV here");

  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--config", config_path, kConfigHelp);
  gen->add_option("--n", n, "number of rides");
  gen->add_option("--seed", seed, "seed (HITCH_SEED overrides default)");
  gen->add_option("--dt", dt, "fixed delta-t");
  gen->add_flag("--flexible", flexible, "draw delta-t per ride");
  gen->add_option("--v-lo", v_lo, "velocity range low end");
  gen->add_option("--v-hi", v_hi, "velocity range high end");
  gen->add_option("--out", out_path, "write instance JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(path);
    if (*offline) return cmd_offline(path, oracle, out_path);
    if (*online)
      return cmd_online(path, policy_name, dt, trace_path, out_path);
    if (*adversary)
      return cmd_adversary(config_path, policy_name, dt, v, eps, out_path,
                           trace_path);
    if (*sweep)
      return cmd_sweep(config_path, v, grid_text, n_instances, n, seed,
                       out_path);
    if (*gen)
      return cmd_gen(config_path, n, seed, dt, flexible, v_lo, v_hi,
                     out_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
