#pragma once

#include <string>
#include <vector>

#include "rupmss/ere.hpp"

namespace rupmss {

struct IrScenarioRecord {
  Scenario scenario;
  Time f_star = 0;          // exact optimum under this scenario
  std::string fingerprint;  // job set at upper bounds
};

struct MasterResult {
  Schedule schedule;
  Time objective = 0;  // min over schedules of max over the set of (F(pi,s) - F*_s)
  bool certified = true;
  long long nodes = 0;
};

/// Relaxed problem over a finite scenario set, solved by branch-and-bound
/// over assignments with exact leaf sequencing (the sequencing decomposition
/// holds per scenario, so one minimum-setup order is optimal for all).
MasterResult solve_master(const Instance& inst, const std::vector<IrScenarioRecord>& scenarios,
                          double time_limit_seconds, const Schedule* warm_start = nullptr);

struct IrHistoryRow {
  int iteration = 0;
  Time lower = 0;
  Time upper = 0;
  double elapsed_seconds = 0;
};

struct IrResult {
  Schedule schedule;
  RegretReport report;
  std::vector<IrScenarioRecord> scenarios;
  std::vector<IrHistoryRow> history;
  Time lower = 0;
  Time upper = 0;
  bool converged = false;  // upper == lower, schedule certified optimal
  int iterations = 0;
  EvalStats stats;
};

/// Scenario-set growth: evaluate the master solution exactly, add its worst
/// extreme scenario, re-solve the master. Lower bounds never decrease, the
/// best upper bound never increases, and equality certifies optimality.
/// Requires an exact inner mode; heuristic configs are promoted to exact.
IrResult ir_solve(const Instance& inst, const EreConfig& ere, double time_limit_seconds);

}  // namespace rupmss
