#pragma once

#include <cstdint>

#include "rupmss/model.hpp"

namespace rupmss {

/// Processing times at the upper bound on `machine`'s own row for the jobs
/// it holds in `sched`; lower bound everywhere else. The maximum regret over
/// these m scenarios equals the maximum over the whole interval box. Depends
/// only on which jobs `machine` holds, not on their order.
Scenario extreme_scenario(const Instance& inst, const Schedule& sched, int machine);

/// Interval midpoints; odd sums round half-up so times stay integral.
Scenario mid_scenario(const Instance& inst);
Scenario lower_scenario(const Instance& inst);
Scenario upper_scenario(const Instance& inst);

/// Entrywise uniform integer draw in [p_lo, p_hi]; deterministic in seed.
Scenario random_scenario(const Instance& inst, std::uint64_t seed);

}  // namespace rupmss
