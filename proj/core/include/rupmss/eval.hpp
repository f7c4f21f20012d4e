#pragma once

#include <utility>
#include <vector>

#include "rupmss/model.hpp"

namespace rupmss {

struct MachineLoad {
  int machine = 0;
  Time total_setup = 0;
  Time total_processing = 0;
  Time completion = 0;  // total_setup + total_processing
  std::vector<Time> job_completions;  // cumulative, one entry per sequence position
};

/// Completion-time range of one machine over all scenarios; the setup part is
/// certain, so hi - lo equals the summed processing-interval widths.
struct CompletionInterval {
  int machine = 0;
  Time lo = 0;
  Time hi = 0;
};

/// Jobs run back to back from time zero, so the completion of a machine is
/// the plain sum of its entry setup, processing times and chained setups.
MachineLoad machine_completion(const Instance& inst, const Schedule& sched,
                               const Scenario& scen, int machine);

/// Makespan plus every machine attaining it (ties retained).
std::pair<Time, std::vector<int>> makespan(const Instance& inst, const Schedule& sched,
                                           const Scenario& scen);

CompletionInterval completion_interval(const Instance& inst, const Schedule& sched, int machine);

/// Single-scenario regret F(pi, s) - F*_s. Throws std::logic_error when the
/// result is negative while f_star is flagged exact: that can only mean the
/// inner solver produced a value above some schedule's true makespan.
Time regret(const Instance& inst, const Schedule& sched, const Scenario& scen,
            Time f_star, bool f_star_exact);

}  // namespace rupmss
