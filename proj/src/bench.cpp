#include "hitch/bench.hpp"

#include <algorithm>
#include <charconv>
#include <future>
#include <stdexcept>

#include "hitch/adversary.hpp"
#include "hitch/offline.hpp"
#include "hitch/online.hpp"

namespace hitch {

namespace {

SweepRow run_cell(const UavConfig& cfg, double v, double dt, int n_instances,
                  int n_rides, uint64_t base_seed) {
  SweepRow row;
  row.dt = dt;
  row.lb_value = lower_bound_value(cfg, v);
  row.ub_myopic = myopic_upper_bound(cfg, v);
  row.ub_adaptive = adaptive_upper_bound(cfg, v, dt);
  row.n_instances = n_instances;
  row.seed = base_seed;
  row.empirical_ratio_myopic = 1.0;
  row.empirical_ratio_adaptive = 1.0;
  for (int i = 0; i < n_instances; ++i) {
    const Instance inst = random_instance(base_seed + i, n_rides, cfg,
                                          DtMode::fixed_at(dt), v, v);
    const HitchPlan opt = optimal_plan(inst);
    MyopicPolicy myopic;
    AdaptivePolicy adaptive(dt);
    // Competitive ratios follow the accepted-set objective (the same
    // quantity the arrival-ahead indicator controls); the realized trace
    // arrival can exceed it by the cost of a backtracked boarding.
    const double r_myopic =
        simulate(inst, myopic).plan.arrival_time / opt.arrival_time;
    const double r_adaptive =
        simulate(inst, adaptive).plan.arrival_time / opt.arrival_time;
    row.empirical_ratio_myopic =
        std::max(row.empirical_ratio_myopic, r_myopic);
    row.empirical_ratio_adaptive =
        std::max(row.empirical_ratio_adaptive, r_adaptive);
  }
  return row;
}

std::string format_double(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

}  // namespace

SweepReport run_sweep(const UavConfig& cfg, double v,
                      std::vector<double> dt_grid, int n_instances,
                      int n_rides, uint64_t base_seed) {
  std::sort(dt_grid.begin(), dt_grid.end());
  std::vector<std::future<SweepRow>> cells;
  cells.reserve(dt_grid.size());
  for (double dt : dt_grid)
    cells.push_back(std::async(std::launch::async, run_cell, cfg, v, dt,
                               n_instances, n_rides, base_seed));
  SweepReport report;
  for (auto& cell : cells) report.rows.push_back(cell.get());
  return report;
}

std::string sweep_to_csv(const SweepReport& report) {
  std::string out =
      "dt,empirical_ratio_myopic,empirical_ratio_adaptive,lb_value,"
      "ub_myopic,ub_adaptive,n_instances,seed\n";
  for (const SweepRow& row : report.rows) {
    out += format_double(row.dt) + ',' +
           format_double(row.empirical_ratio_myopic) + ',' +
           format_double(row.empirical_ratio_adaptive) + ',' +
           format_double(row.lb_value) + ',' +
           format_double(row.ub_myopic) + ',' +
           format_double(row.ub_adaptive) + ',' +
           std::to_string(row.n_instances) + ',' +
           std::to_string(row.seed) + '\n';
  }
  return out;
}

SweepReport sweep_from_csv(const std::string& text) {
  SweepReport report;
  size_t pos = 0;
  bool header = true;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    const std::string_view line(text.data() + pos, end - pos);
    pos = end + 1;
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string_view> fields;
    size_t f = 0;
    while (f <= line.size()) {
      size_t comma = line.find(',', f);
      if (comma == std::string_view::npos) comma = line.size();
      fields.push_back(line.substr(f, comma - f));
      f = comma + 1;
    }
    if (fields.size() != 8)
      throw std::runtime_error("sweep csv: expected 8 columns");
    auto num = [](std::string_view s) {
      double x = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
      if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::runtime_error("sweep csv: bad number");
      return x;
    };
    auto integer = [](std::string_view s) {
      uint64_t x = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
      if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::runtime_error("sweep csv: bad integer");
      return x;
    };
    SweepRow row;
    row.dt = num(fields[0]);
    row.empirical_ratio_myopic = num(fields[1]);
    row.empirical_ratio_adaptive = num(fields[2]);
    row.lb_value = num(fields[3]);
    row.ub_myopic = num(fields[4]);
    row.ub_adaptive = num(fields[5]);
    row.n_instances = static_cast<int>(integer(fields[6]));
    row.seed = integer(fields[7]);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace hitch
