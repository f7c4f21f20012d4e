#pragma once

#include <vector>

#include "rupmss/model.hpp"

namespace rupmss {

/// Subset DP is exact up to this many jobs on a single machine; larger sets
/// fall back to greedy construction + 2-opt/or-opt and flag the result as
/// non-certified.
inline constexpr int kExactSequencingThreshold = 15;

struct SequencingResult {
  std::vector<int> sequence;
  Time total_setup = 0;
  bool certified = true;
};

/// Minimum-total-setup order of `jobs` on `machine`: an open path starting at
/// the dummy job with a free end (closing setups are zero). Ties between
/// equal-setup orders break toward the lexicographically smallest sequence.
SequencingResult optimal_machine_sequence(const Instance& inst, int machine,
                                          const std::vector<int>& jobs);

struct ResequenceResult {
  Schedule schedule;
  Time total_setup = 0;
  bool certified = true;
};

/// Applies optimal_machine_sequence independently per machine. The resulting
/// schedule has minimum total setup among all schedules with this assignment,
/// and by the sequencing decomposition also the smallest maximum regret.
ResequenceResult resequence(const Instance& inst, const std::vector<std::vector<int>>& assignment);

}  // namespace rupmss
