#include "rupmss/ere.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "rupmss/eval.hpp"
#include "rupmss/rng.hpp"
#include "rupmss/scenario.hpp"

namespace rupmss {

EreConfig ere_mode_config(const std::string& mode) {
  EreConfig cfg;
  if (mode == "ORIG") return cfg;
  if (mode == "M3") {
    cfg.enable_scenario_lb = true;
    return cfg;
  }
  if (mode == "M23") {
    cfg.enable_dominance = true;
    cfg.enable_scenario_lb = true;
    return cfg;
  }
  if (mode == "M123") {
    cfg.enable_neighbor_lb = true;
    cfg.enable_dominance = true;
    cfg.enable_scenario_lb = true;
    return cfg;
  }
  if (mode == "M1234") {
    cfg.enable_neighbor_lb = true;
    cfg.enable_dominance = true;
    cfg.enable_scenario_lb = true;
    cfg.inner_mode = SolveMode::Heuristic;
    return cfg;
  }
  throw std::invalid_argument("unknown evaluation mode: " + mode +
                              " (expected ORIG, M3, M23, M123 or M1234)");
}

std::string ere_mode_name(const EreConfig& cfg) {
  if (cfg.inner_mode == SolveMode::Heuristic) return "M1234";
  if (cfg.enable_neighbor_lb) return "M123";
  if (cfg.enable_dominance && cfg.enable_scenario_lb) return "M23";
  if (cfg.enable_scenario_lb) return "M3";
  return "ORIG";
}

std::string scenario_fingerprint(const Schedule& sched, int machine) {
  std::vector<int> jobs = sched.seq[machine];
  // an empty machine yields the all-lower scenario whichever machine it is
  if (jobs.empty()) return "lower";
  std::sort(jobs.begin(), jobs.end());
  std::string key = "m" + std::to_string(machine) + ":";
  for (int job : jobs) {
    key += std::to_string(job);
    key += ',';
  }
  return key;
}

Time neighbor_lb(const Instance& inst, const Schedule& candidate, const Schedule& incumbent) {
  Time best = std::numeric_limits<Time>::min();
  for (int f = 0; f < inst.num_machines; ++f) {
    const Scenario scen = extreme_scenario(inst, candidate, f);
    const Time gap = makespan(inst, candidate, scen).first - makespan(inst, incumbent, scen).first;
    best = std::max(best, gap);
  }
  return best;
}

std::vector<int> dominated_machines(const Instance& inst, const Schedule& sched) {
  const int m = inst.num_machines;
  std::vector<CompletionInterval> intervals;
  intervals.reserve(m);
  for (int i = 0; i < m; ++i) intervals.push_back(completion_interval(inst, sched, i));
  std::vector<int> dominated;
  for (int i = 0; i < m; ++i)
    for (int other = 0; other < m; ++other)
      if (other != i && intervals[i].hi < intervals[other].lo) {
        dominated.push_back(i);
        break;
      }
  return dominated;
}

namespace {

struct InnerSolve {
  Time f_star = 0;
  bool certified = true;
  bool from_cache = false;
  bool solver_invoked = false;
};

InnerSolve solve_scenario(const Instance& inst, const Scenario& scen, const std::string& fingerprint,
                          const EreConfig& cfg, FStarCache* cache) {
  InnerSolve out;
  if (cache != nullptr) {
    const auto it = cache->value.find(fingerprint);
    if (it != cache->value.end()) {
      out.f_star = it->second;
      out.from_cache = true;
      out.certified = cfg.inner_mode == SolveMode::Exact;
      return out;
    }
  }
  DetSolverConfig inner = cfg.inner;
  // The seed is tied to the scenario so a cache hit and a fresh solve can
  // never disagree in heuristic mode.
  inner.seed = mix_seed(cfg.inner.seed, std::hash<std::string>{}(fingerprint));
  const DetSolveResult solved = cfg.inner_mode == SolveMode::Exact
                                    ? solve_exact(inst, scen, inner)
                                    : solve_heuristic(inst, scen, inner);
  out.f_star = solved.makespan;
  out.certified = solved.certified_optimal;
  out.solver_invoked = true;
  if (cache != nullptr) cache->value.emplace(fingerprint, out.f_star);
  return out;
}

}  // namespace

RegretReport evaluate_regret(const Instance& inst, const Schedule& sched, const EreConfig& cfg,
                             const Incumbent* incumbent, FStarCache* cache) {
  const int m = inst.num_machines;
  RegretReport report;
  report.inner_mode = cfg.inner_mode;
  report.certified = cfg.inner_mode == SolveMode::Exact;
  report.per_scenario.resize(m);
  for (int f = 0; f < m; ++f) report.per_scenario[f].machine = f;

  // Step 2: a candidate whose regret lower bound already exceeds the
  // incumbent's maximum regret cannot win; drop it before any inner solve.
  if (cfg.enable_neighbor_lb && incumbent != nullptr && incumbent->schedule != nullptr) {
    const Time lb = neighbor_lb(inst, sched, *incumbent->schedule);
    if (lb > incumbent->r_max) {
      report.aborted_by_neighbor_lb = true;
      report.neighbor_lb_value = lb;
      report.r_max = lb;  // a lower bound, not the true value
      report.certified = false;
      return report;
    }
  }

  std::vector<Scenario> extremes;
  extremes.reserve(m);
  for (int f = 0; f < m; ++f) {
    extremes.push_back(extreme_scenario(inst, sched, f));
    report.per_scenario[f].f_pi = makespan(inst, sched, extremes[f]).first;
  }

  // Step 3: dominance rule.
  std::vector<int> survivors;
  if (cfg.enable_dominance) {
    std::vector<CompletionInterval> intervals;
    intervals.reserve(m);
    for (int i = 0; i < m; ++i) intervals.push_back(completion_interval(inst, sched, i));
    for (int f = 0; f < m; ++f) {
      int witness = -1;
      for (int other = 0; other < m && witness < 0; ++other)
        if (other != f && intervals[f].hi < intervals[other].lo) witness = other;
      if (witness >= 0) {
        report.per_scenario[f].status = ScenarioStatus::Dominated;
        report.per_scenario[f].dominated_by = witness;
        ++report.dominated_count;
      } else {
        survivors.push_back(f);
      }
    }
  } else {
    for (int f = 0; f < m; ++f) survivors.push_back(f);
  }

  // Step 4: traverse the surviving extreme scenarios. The first is always
  // solved; later ones are skipped whenever even a lower-bound replacement
  // of F* cannot push the regret above the running maximum. Comparing with
  // the running maximum instead of the first regret only prunes more and
  // cannot change the result.
  Time running_max = 0;
  bool have_eval = false;
  Time best_regret = 0;
  int best_f = -1;
  for (std::size_t idx = 0; idx < survivors.size(); ++idx) {
    const int f = survivors[idx];
    auto& entry = report.per_scenario[f];
    if (idx > 0 && cfg.enable_scenario_lb) {
      Time lb = std::max(lb1(inst, extremes[f]), lb2(inst, extremes[f]));
      if (cfg.inner.enable_lb3)
        lb = std::max(lb, lb3(inst, extremes[f], true).value_or(0));
      if (entry.f_pi - lb <= running_max) {
        entry.status = ScenarioStatus::LbPruned;
        entry.lower_bound = lb;
        ++report.lb_pruned_count;
        continue;
      }
    }
    const InnerSolve solved =
        solve_scenario(inst, extremes[f], scenario_fingerprint(sched, f), cfg, cache);
    if (solved.solver_invoked) ++report.inner_solves;
    report.certified = report.certified && solved.certified;
    entry.status = ScenarioStatus::Evaluated;
    entry.f_star = solved.f_star;
    entry.inner_from_cache = solved.from_cache;
    const Time r = entry.f_pi - solved.f_star;
    entry.regret = r;
    if (!have_eval || r > best_regret) {
      have_eval = true;
      best_regret = r;
      best_f = f;
    }
    running_max = std::max(running_max, r);
  }

  report.r_max = best_regret;
  report.worst_scenario = best_f;
  if (best_f >= 0) {
    const auto critical = makespan(inst, sched, extremes[best_f]).second;
    report.worst_machine = critical.empty() ? -1 : critical.front();
  }
  return report;
}

}  // namespace rupmss
