#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rupmss {

/// All times (setup, processing, completion, regret) are exact nonnegative
/// integers; there is no floating point anywhere in the solver path.
using Time = long long;

/// Jobs are 1-based; index 0 is the dummy job that opens every machine
/// sequence. Matrices therefore carry n+1 columns with column 0 fixed to 0.
struct Instance {
  int num_jobs = 0;
  int num_machines = 0;
  /// setup[i][j][k]: setup incurred on machine i when job k follows job j.
  /// setup[i][j][j] = 0 and setup[i][j][0] = 0 (closing a machine is free).
  std::vector<std::vector<std::vector<Time>>> setup;
  /// Processing-time interval bounds, [machine][job 0..n].
  std::vector<std::vector<Time>> p_lo;
  std::vector<std::vector<Time>> p_hi;
};

/// One realization of all processing times inside their intervals.
struct Scenario {
  std::vector<std::vector<Time>> p;  // [machine][job 0..n], column 0 is zero
  std::string label;                 // "mid", "lower", "upper", "extreme(f)", "random(seed)"
};

/// Per-machine ordered job sequences. The sequences partition {1..n}.
struct Schedule {
  std::vector<std::vector<int>> seq;
};

struct GeneratorConfig {
  std::uint64_t seed = 1;
  int num_jobs = 1;
  int num_machines = 1;
  Time setup_min = 1;
  Time setup_max = 10;
  Time p_lo_min = 1;
  Time p_lo_max = 50;
  Time hi_factor = 2;  // p_hi ~ uniform [p_lo, hi_factor * p_lo]
};

/// Returns every violated invariant with indices; empty means valid.
std::vector<std::string> validate_instance(const Instance& inst);
std::vector<std::string> validate_schedule(const Instance& inst, const Schedule& sched);
std::vector<std::string> validate_scenario(const Instance& inst, const Scenario& scen);

/// Throws std::invalid_argument listing all violations.
void require_valid(const Instance& inst);

/// Deterministic in the config; distributions follow GeneratorConfig.
Instance generate_instance(const GeneratorConfig& cfg);

/// Job sets per machine, each sorted ascending; sequence order is dropped.
std::vector<std::vector<int>> assignment_of(const Schedule& sched);

bool operator==(const Instance& a, const Instance& b);
bool operator==(const Scenario& a, const Scenario& b);
bool operator==(const Schedule& a, const Schedule& b);

}  // namespace rupmss
