#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hitch/types.hpp"

namespace hitch {

struct SweepRow {
  double dt = 0;
  double empirical_ratio_myopic = 0;   // worst case over the row's instances
  double empirical_ratio_adaptive = 0;
  double lb_value = 0;
  double ub_myopic = 0;
  double ub_adaptive = 0;
  int n_instances = 0;
  uint64_t seed = 0;
};

struct SweepReport {
  std::vector<SweepRow> rows;  // sorted by dt
};

// Runs both online policies and the offline optimum over seeded fixed-dt
// instance families (uniform ride velocity v) for every dt in the grid.
// Rows are computed concurrently, assembled in grid order.
SweepReport run_sweep(const UavConfig& cfg, double v,
                      std::vector<double> dt_grid, int n_instances,
                      int n_rides, uint64_t base_seed);

// CSV with a header row; numbers print exactly (shortest round-trip form).
std::string sweep_to_csv(const SweepReport& report);
SweepReport sweep_from_csv(const std::string& text);

}  // namespace hitch
