#pragma once

#include <vector>

#include "rupmss/ere.hpp"

namespace rupmss {

struct SaConfig {
  std::uint64_t seed = 1;
  double initial_temperature = 0;  // <= 0 self-scales to the starting maximum regret
  double cooling_rate = 0.95;
  long long moves_per_temperature = 0;  // <= 0 means 30 * n
  double min_temperature_ratio = 1e-3;  // stop once T < ratio * T0
  double time_limit_seconds = 60.0;
  EreConfig ere;
  bool collect_trace = true;
};

struct SaResult {
  Schedule schedule;
  RegretReport report;
  std::vector<TraceEvent> trace;
  std::vector<double> temperatures;  // one entry per completed stage
  long long moves = 0;
  bool truncated = false;
  EvalStats stats;
};

/// Simulated-annealing baseline: mid-scenario deterministic start, random
/// shift or interchange neighbors with resequencing, Metropolis acceptance,
/// geometric cooling. Returns the best schedule ever visited; deterministic
/// in the seed when the time limit does not bite.
SaResult sa_solve(const Instance& inst, const SaConfig& cfg);

}  // namespace rupmss
