#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rupmss/detsolve.hpp"
#include "rupmss/model.hpp"

namespace rupmss {

enum class ScenarioStatus { Evaluated, Dominated, LbPruned, Unreached };

struct ScenarioEntry {
  int machine = 0;                  // f of extreme scenario s^f
  Time f_pi = 0;                    // F(pi, s^f)
  std::optional<Time> f_star;       // inner-solver optimum when evaluated
  std::optional<Time> lower_bound;  // LB^{s^f} witness when pruned by it
  std::optional<Time> regret;
  ScenarioStatus status = ScenarioStatus::Unreached;
  int dominated_by = -1;            // witness machine for the dominance rule
  bool inner_from_cache = false;
};

struct RegretReport {
  Time r_max = 0;
  int worst_scenario = -1;  // f whose extreme scenario attains r_max
  int worst_machine = -1;   // critical machine under that scenario (lowest index on ties)
  std::vector<ScenarioEntry> per_scenario;
  bool aborted_by_neighbor_lb = false;
  Time neighbor_lb_value = 0;  // meaningful only when aborted
  SolveMode inner_mode = SolveMode::Exact;
  bool certified = true;  // exact inner, every inner solve certified, not aborted
  long long inner_solves = 0;
  long long dominated_count = 0;
  long long lb_pruned_count = 0;
};

struct EreConfig {
  bool enable_neighbor_lb = false;   // mechanism 1: abandon inferior neighbors
  bool enable_dominance = false;     // mechanism 2: completion-interval rule
  bool enable_scenario_lb = false;   // mechanism 3: skip via deterministic LB
  SolveMode inner_mode = SolveMode::Exact;  // heuristic inner = mechanism 4
  DetSolverConfig inner;
};

/// Named mechanism sets: ORIG, M3, M23, M123, M1234.
EreConfig ere_mode_config(const std::string& mode);
std::string ere_mode_name(const EreConfig& cfg);

/// Extreme scenarios are fully determined by the job set of their machine, so
/// optima can be reused across evaluations within one solver run.
struct FStarCache {
  std::unordered_map<std::string, Time> value;
};

/// Fingerprint of extreme_scenario(sched, machine): the machine's job set.
std::string scenario_fingerprint(const Schedule& sched, int machine);

/// max over f of F(candidate, s^f) - F(incumbent, s^f), with s^f the extreme
/// scenarios of the candidate. A lower bound on the candidate's maximum
/// regret; may be negative.
Time neighbor_lb(const Instance& inst, const Schedule& candidate, const Schedule& incumbent);

/// Machines whose completion interval lies strictly below some other
/// machine's interval; their extreme scenarios cannot be worst cases.
std::vector<int> dominated_machines(const Instance& inst, const Schedule& sched);

struct Incumbent {
  const Schedule* schedule = nullptr;
  Time r_max = 0;
};

/// Maximum regret of `sched` over its extreme scenarios, with the pruning
/// mechanisms switched by `cfg`. Order of business: neighbor-LB abort (needs
/// an incumbent), dominance filtering, then the scenario traversal where the
/// first survivor is solved exactly and later ones may be skipped when
/// F(pi, s^f) - LB^{s^f} cannot exceed the running maximum.
RegretReport evaluate_regret(const Instance& inst, const Schedule& sched, const EreConfig& cfg,
                             const Incumbent* incumbent = nullptr, FStarCache* cache = nullptr);

/// One record per evaluated or pruned neighbor; solvers accumulate these so
/// search behavior can be audited and emitted as JSON lines.
struct TraceEvent {
  int start_index = -1;
  std::string phase;    // "init" | "shift" | "interchange" | "anneal" | "cool"
  std::string move;
  std::string outcome;  // "accepted" | "rejected" | "aborted" | "duplicate" | "initial"
  Time value = 0;       // r_max, or the aborting lower bound
};

/// Counters aggregated across every regret evaluation of a solver run.
struct EvalStats {
  long long evaluations = 0;
  long long inner_solves = 0;
  long long dominated = 0;
  long long lb_pruned = 0;
  long long neighbor_aborts = 0;

  void absorb(const RegretReport& report) {
    ++evaluations;
    inner_solves += report.inner_solves;
    dominated += report.dominated_count;
    lb_pruned += report.lb_pruned_count;
    if (report.aborted_by_neighbor_lb) ++neighbor_aborts;
  }
};

}  // namespace rupmss
