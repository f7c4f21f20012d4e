#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rupmss/ere.hpp"

namespace rupmss {

/// 2*alpha/(2+alpha) * F*_mid, kept as exact rationals. alpha is the largest
/// relative interval width (p_hi - p_lo) / p_lo over all entries.
struct BoundReport {
  long long alpha_num = 0;
  long long alpha_den = 1;
  Time f_star_mid_x2 = 0;  // twice the optimal makespan under the exact midpoint scenario
  bool f_star_certified = true;
  long long bound_num = 0;
  long long bound_den = 1;
  double alpha = 0;
  double bound = 0;
};

/// Throws std::domain_error when some p_lo is zero while p_hi is positive
/// (alpha undefined). Entries with p_lo = p_hi = 0 contribute nothing.
BoundReport midpoint_upper_bound(const Instance& inst, Time f_star_mid_x2, bool certified);

/// Deterministic solve under the exact interval-midpoint scenario. Midpoints
/// can be half-integral, so all times are doubled (setups included) to stay
/// in integer arithmetic; the returned objective is twice the true optimum.
struct MidpointSolve {
  Schedule schedule;
  Time f_star_x2 = 0;
  bool certified = true;
};
MidpointSolve solve_midpoint(const Instance& inst, const DetSolverConfig& cfg);

struct SearchOutcome {
  Schedule schedule;
  RegretReport report;
};

/// First-improvement descent moving jobs off the critical machine; both
/// touched machines are resequenced before evaluation. A full improvement-
/// free scan terminates the search.
SearchOutcome shift_search(const Instance& inst, const Schedule& start,
                           const RegretReport& start_report, const EreConfig& ere,
                           FStarCache* cache, EvalStats* stats,
                           std::vector<TraceEvent>* trace, int start_index,
                           const class Deadline& deadline);

/// First-improvement descent swapping machine assignments of job pairs; pairs
/// on one machine or entirely off the critical machine are filtered out.
SearchOutcome interchange_search(const Instance& inst, const Schedule& start,
                                 const RegretReport& start_report, const EreConfig& ere,
                                 FStarCache* cache, EvalStats* stats,
                                 std::vector<TraceEvent>* trace, int start_index,
                                 const class Deadline& deadline);

struct MdhConfig {
  int init_count = 5;
  double time_limit_seconds = 60.0;
  std::uint64_t seed = 1;
  EreConfig ere;
  bool collect_trace = true;
};

struct MdhStart {
  int index = 0;
  std::string scenario;
  bool skipped_duplicate = false;
  Time initial_r_max = 0;
  Time final_r_max = 0;
};

struct MdhResult {
  Schedule schedule;
  RegretReport report;
  std::vector<MdhStart> starts;
  std::vector<TraceEvent> trace;
  std::optional<BoundReport> bound;  // from the midpoint start
  EvalStats stats;
  bool truncated = false;
};

/// Multi-start driver: deterministic solves under midpoint / upper / lower /
/// seeded random scenarios provide the initial solutions (midpoint first, so
/// the 2a/(2+a) guarantee covers the output); each start runs shift then
/// interchange descent; the best final solution wins, earlier start on ties.
MdhResult mdh_solve(const Instance& inst, const MdhConfig& cfg);

}  // namespace rupmss
