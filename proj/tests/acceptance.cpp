// Acceptance suite: end-to-end checks of the solver stack against brute-force
// oracles, printed one line per criterion. Exits nonzero if any criterion
// fails. Expected total runtime is a couple of minutes on one core.

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rupmss/detsolve.hpp"
#include "rupmss/ere.hpp"
#include "rupmss/eval.hpp"
#include "rupmss/ir.hpp"
#include "rupmss/json_io.hpp"
#include "rupmss/mdh.hpp"
#include "rupmss/model.hpp"
#include "rupmss/sa.hpp"
#include "rupmss/scenario.hpp"
#include "rupmss/seqopt.hpp"
#include "rupmss/util.hpp"
#include "test_support.hpp"

using namespace rupmss;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
  std::printf("criterion %2d %s  %s (%s, %.1fs)\n", id, pass ? "PASS" : "FAIL", name.c_str(),
              detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++failures;
}

Schedule spread_schedule(int n, int m) {
  Schedule sched;
  sched.seq.resize(m);
  for (int j = 1; j <= n; ++j) sched.seq[(j - 1) % m].push_back(j);
  return sched;
}

// Shared fixture: the criterion-1 instance set with its oracle optima and IR
// results, reused by criteria 7 and 8.
struct RobustCase {
  Instance inst;
  oracle::RobustOpt opt;
  IrResult ir;
};
std::vector<RobustCase> robust_cases;

void criterion1_robust_oracle_equivalence() {
  Stopwatch watch;
  const int count = 50;
  int matched = 0;
  for (int c = 0; c < count; ++c) {
    RobustCase robust;
    robust.inst = testsupport::seeded(1 + c, 3 + c % 3, 2);
    robust.opt = oracle::robust_opt(robust.inst);
    robust.ir = ir_solve(robust.inst, ere_mode_config("M23"), 60.0);
    if (robust.ir.converged && robust.ir.report.r_max == robust.opt.r_max &&
        robust.ir.lower == robust.opt.r_max && robust.ir.upper == robust.opt.r_max)
      ++matched;
    robust_cases.push_back(std::move(robust));
  }
  report(1, "robust-oracle equivalence (ir vs double brute force)", matched == count,
         std::to_string(matched) + "/" + std::to_string(count) + " exact matches",
         watch.seconds());
}

void criterion2_extreme_scenario_sufficiency() {
  Stopwatch watch;
  const int pairs = 50;
  const int draws = 200;
  long long violations = 0;
  for (int c = 0; c < pairs; ++c) {
    const int n = 3 + c % 3;
    const int m = 2 + c % 2;
    const Instance inst = testsupport::seeded(100 + c, n, m);
    const Schedule sched = spread_schedule(n, m);
    const Time r_max = evaluate_regret(inst, sched, ere_mode_config("ORIG")).r_max;
    for (int d = 0; d < draws; ++d) {
      const Scenario scen = random_scenario(inst, 10000ULL + c * 1000ULL + d);
      const Time f_star = oracle::best_makespan(inst, scen);
      if (makespan(inst, sched, scen).first - f_star > r_max) ++violations;
    }
  }
  report(2, "extreme-scenario sufficiency over random interior scenarios", violations == 0,
         std::to_string(pairs * draws) + " scenarios, " + std::to_string(violations) +
             " violations",
         watch.seconds());
}

void criterion3_pruning_soundness() {
  Stopwatch watch;
  const int count = 100;
  int sound = 0;
  bool counts_monotone = true;
  for (int c = 0; c < count; ++c) {
    const int n = 4 + c % 3;
    const int m = 2 + c % 2;
    const Instance inst = testsupport::seeded(300 + c, n, m);
    const Schedule sched = spread_schedule(n, m);
    const RegretReport orig = evaluate_regret(inst, sched, ere_mode_config("ORIG"));
    const RegretReport m23 = evaluate_regret(inst, sched, ere_mode_config("M23"));
    const RegretReport m123 = evaluate_regret(inst, sched, ere_mode_config("M123"));
    if (m23.r_max == orig.r_max && m123.r_max == orig.r_max) ++sound;
    if (!(m123.inner_solves <= m23.inner_solves && m23.inner_solves <= orig.inner_solves))
      counts_monotone = false;
  }
  report(3, "pruned evaluation equals ORIG with monotone solve counts",
         sound == count && counts_monotone,
         std::to_string(sound) + "/" + std::to_string(count) + " equal, counts monotone: " +
             (counts_monotone ? "yes" : "no"),
         watch.seconds());
}

void criterion4_sequencing_dominance() {
  Stopwatch watch;
  const int count = 30;
  long long violations = 0;
  long long compared = 0;
  for (int c = 0; c < count; ++c) {
    const int n = 3 + c % 3;
    const Instance inst = testsupport::seeded(400 + c, n, 2);
    FStarCache cache;
    const EreConfig cfg = ere_mode_config("ORIG");
    std::map<std::vector<std::vector<int>>, Time> reseq_regret;
    oracle::enumerate_schedules(n, 2, [&](const Schedule& sched) {
      const auto assignment = assignment_of(sched);
      auto it = reseq_regret.find(assignment);
      if (it == reseq_regret.end()) {
        const Schedule canonical = resequence(inst, assignment).schedule;
        const Time r = evaluate_regret(inst, canonical, cfg, nullptr, &cache).r_max;
        it = reseq_regret.emplace(assignment, r).first;
      }
      const Time r_any = evaluate_regret(inst, sched, cfg, nullptr, &cache).r_max;
      ++compared;
      if (it->second > r_any) ++violations;
    });
  }
  report(4, "minimum-setup resequencing never worsens the maximum regret", violations == 0,
         std::to_string(compared) + " schedules, " + std::to_string(violations) + " violations",
         watch.seconds());
}

void criterion5_midpoint_bound() {
  Stopwatch watch;
  const int count = 50;
  int held = 0;
  int generator_form = 0;
  for (int c = 0; c < count; ++c) {
    const int n = 4 + c % 3;
    const int m = 2 + c % 2;
    const Instance inst = testsupport::seeded(500 + c, n, m);
    DetSolverConfig det;
    const MidpointSolve mid = solve_midpoint(inst, det);
    const BoundReport bound = midpoint_upper_bound(inst, mid.f_star_x2, mid.certified);
    const Time r_max = evaluate_regret(inst, mid.schedule, ere_mode_config("ORIG")).r_max;
    // exact rational comparison: r_max <= bound_num / bound_den
    if (mid.certified && r_max * bound.bound_den <= bound.bound_num) ++held;
    // the generator keeps p_hi <= 2 p_lo, so the factor never exceeds 2/3:
    // bound <= (2/3) F*_mid  <=>  3 bound_num <= f_x2 * bound_den
    if (3 * bound.bound_num <= mid.f_star_x2 * bound.bound_den) ++generator_form;
  }
  report(5, "midpoint-optimum regret respects the 2a/(2+a) bound",
         held == count && generator_form == count,
         std::to_string(held) + "/" + std::to_string(count) + " bounded, " +
             std::to_string(generator_form) + "/" + std::to_string(count) + " within 2/3 F*mid",
         watch.seconds());
}

void criterion6_local_search_filter() {
  Stopwatch watch;
  const int count = 30;
  long long improving_untouched = 0;
  long long neighbors_checked = 0;
  for (int c = 0; c < count; ++c) {
    const int n = 4 + c % 2;
    const int m = 2 + c % 2;
    const Instance inst = testsupport::seeded(600 + c, n, m);
    const EreConfig cfg = ere_mode_config("ORIG");
    FStarCache cache;

    // drive to a shift+interchange local optimum
    DetSolverConfig det;
    Schedule cur = solve_midpoint(inst, det).schedule;
    cur = resequence(inst, assignment_of(cur)).schedule;
    RegretReport cur_report = evaluate_regret(inst, cur, cfg, nullptr, &cache);
    for (int round = 0; round < 10; ++round) {
      const Time before = cur_report.r_max;
      auto outcome = shift_search(inst, cur, cur_report, cfg, &cache, nullptr, nullptr, 0, Deadline());
      outcome = interchange_search(inst, outcome.schedule, outcome.report, cfg, &cache, nullptr,
                                   nullptr, 0, Deadline());
      cur = outcome.schedule;
      cur_report = outcome.report;
      if (cur_report.r_max == before) break;
    }

    // machines critical under some maximizing extreme scenario
    std::set<int> protected_machines;
    for (int f = 0; f < m; ++f) {
      const Scenario scen = extreme_scenario(inst, cur, f);
      const Time f_star = cur_report.per_scenario[f].f_star
                              ? *cur_report.per_scenario[f].f_star
                              : solve_exact(inst, scen).makespan;
      if (makespan(inst, cur, scen).first - f_star != cur_report.r_max) continue;
      for (int g : makespan(inst, cur, scen).second) protected_machines.insert(g);
    }

    const auto where = [&](int job) {
      for (int i = 0; i < m; ++i)
        for (int other : cur.seq[i])
          if (other == job) return i;
      return -1;
    };
    const auto check_neighbor = [&](const std::vector<std::vector<int>>& sets,
                                    const std::set<int>& touched) {
      ++neighbors_checked;
      const Schedule neighbor = resequence(inst, sets).schedule;
      const Time r = evaluate_regret(inst, neighbor, cfg, nullptr, &cache).r_max;
      if (r >= cur_report.r_max) return;
      // an improving move must touch every machine that can host the worst case
      for (int g : protected_machines)
        if (touched.count(g) == 0) ++improving_untouched;
    };

    for (int job = 1; job <= n; ++job) {
      const int from = where(job);
      for (int to = 0; to < m; ++to) {
        if (to == from) continue;
        auto sets = assignment_of(cur);
        sets[from].erase(std::find(sets[from].begin(), sets[from].end(), job));
        sets[to].insert(std::lower_bound(sets[to].begin(), sets[to].end(), job), job);
        check_neighbor(sets, {from, to});
      }
    }
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        const int ma = where(a), mb = where(b);
        if (ma == mb) continue;
        auto sets = assignment_of(cur);
        sets[ma].erase(std::find(sets[ma].begin(), sets[ma].end(), a));
        sets[mb].erase(std::find(sets[mb].begin(), sets[mb].end(), b));
        sets[ma].insert(std::lower_bound(sets[ma].begin(), sets[ma].end(), b), b);
        sets[mb].insert(std::lower_bound(sets[mb].begin(), sets[mb].end(), a), a);
        check_neighbor(sets, {ma, mb});
      }
  }
  report(6, "no improving move leaves the critical machine untouched", improving_untouched == 0,
         std::to_string(neighbors_checked) + " neighbors, " +
             std::to_string(improving_untouched) + " violations",
         watch.seconds());
}

void criterion7_mdh_sandwich() {
  Stopwatch watch;
  int held = 0;
  for (const auto& robust : robust_cases) {
    MdhConfig cfg;
    cfg.seed = 17;
    cfg.collect_trace = false;
    const MdhResult result = mdh_solve(robust.inst, cfg);
    bool ok = result.report.r_max >= robust.opt.r_max;
    ok = ok && !result.starts.empty() && !result.starts[0].skipped_duplicate &&
         result.report.r_max <= result.starts[0].initial_r_max;
    ok = ok && result.bound.has_value() &&
         result.report.r_max * result.bound->bound_den <= result.bound->bound_num;
    if (ok) ++held;
  }
  report(7, "mdh sandwich: optimum <= mdh <= midpoint bound, mid-gap <= 0",
         held == static_cast<int>(robust_cases.size()),
         std::to_string(held) + "/" + std::to_string(robust_cases.size()) + " sandwiched",
         watch.seconds());
}

void criterion8_ir_bound_monotonicity() {
  Stopwatch watch;
  int held = 0;
  for (const auto& robust : robust_cases) {
    bool ok = !robust.ir.history.empty();
    Time last_lower = 0;
    Time last_upper = (1LL << 62);
    for (const auto& row : robust.ir.history) {
      if (row.lower < last_lower || row.upper > last_upper || row.lower > row.upper) ok = false;
      last_lower = row.lower;
      last_upper = row.upper;
    }
    if (robust.ir.converged && robust.ir.history.back().lower != robust.ir.history.back().upper)
      ok = false;
    if (ok) ++held;
  }
  report(8, "ir lower bounds rise, upper bounds fall, gap closes", held == static_cast<int>(robust_cases.size()),
         std::to_string(held) + "/" + std::to_string(robust_cases.size()) + " monotone",
         watch.seconds());
}

void criterion9_determinism() {
  Stopwatch watch;
  const Instance inst = testsupport::seeded(700, 6, 2);
  bool ok = true;

  MdhConfig mdh_cfg;
  mdh_cfg.seed = 5;
  std::string mdh_first;
  for (int run = 0; run < 3; ++run) {
    const std::string text = mdh_result_to_json(mdh_solve(inst, mdh_cfg), mdh_cfg);
    if (run == 0) mdh_first = text;
    ok = ok && text == mdh_first;
  }

  std::string ir_first;
  for (int run = 0; run < 3; ++run) {
    const std::string text = ir_result_to_json(ir_solve(inst, ere_mode_config("M23"), 60.0));
    if (run == 0) ir_first = text;
    ok = ok && text == ir_first;
  }

  SaConfig sa_cfg;
  sa_cfg.seed = 5;
  sa_cfg.moves_per_temperature = 15;
  sa_cfg.min_temperature_ratio = 0.02;
  std::string sa_first;
  for (int run = 0; run < 3; ++run) {
    const std::string text = sa_result_to_json(sa_solve(inst, sa_cfg), sa_cfg);
    if (run == 0) sa_first = text;
    ok = ok && text == sa_first;
  }

  const Scenario scen = mid_scenario(inst);
  DetSolverConfig exact_cfg;
  std::string exact_first;
  for (int run = 0; run < 3; ++run) {
    const std::string text = detsolve_result_to_json(solve_exact(inst, scen, exact_cfg));
    if (run == 0) exact_first = text;
    ok = ok && text == exact_first;
  }
  DetSolverConfig heur_cfg;
  heur_cfg.mode = SolveMode::Heuristic;
  heur_cfg.seed = 9;
  heur_cfg.iteration_budget = 300;
  std::string heur_first;
  for (int run = 0; run < 3; ++run) {
    const std::string text = detsolve_result_to_json(solve_heuristic(inst, scen, heur_cfg));
    if (run == 0) heur_first = text;
    ok = ok && text == heur_first;
  }

  report(9, "seeded runs reproduce byte-identical reports (3x each solver)", ok,
         ok ? "mdh, ir, sa, detsolve exact+heuristic all stable" : "mismatch found",
         watch.seconds());
}

void criterion10_sequencing_oracle() {
  Stopwatch watch;
  const int matrices = 100;
  long long mismatches = 0;
  long long checked = 0;
  for (int c = 0; c < matrices; ++c) {
    const Instance inst = testsupport::seeded(800 + c, 8, 1);
    for (int size = 1; size <= 8; ++size) {
      std::vector<int> jobs(size);
      for (int j = 0; j < size; ++j) jobs[j] = j + 1;
      ++checked;
      if (optimal_machine_sequence(inst, 0, jobs).total_setup !=
          oracle::best_sequence_setup(inst, 0, jobs))
        ++mismatches;
    }
  }
  report(10, "subset-DP sequencing equals exhaustive permutation minima", mismatches == 0,
         std::to_string(checked) + " job sets, " + std::to_string(mismatches) + " mismatches",
         watch.seconds());
}

}  // namespace

int main() {
  Stopwatch total;
  criterion1_robust_oracle_equivalence();
  criterion2_extreme_scenario_sufficiency();
  criterion3_pruning_soundness();
  criterion4_sequencing_dominance();
  criterion5_midpoint_bound();
  criterion6_local_search_filter();
  criterion7_mdh_sandwich();
  criterion8_ir_bound_monotonicity();
  criterion9_determinism();
  criterion10_sequencing_oracle();
  std::printf("%s: %d criterion(s) failed, total %.1fs\n", failures == 0 ? "ACCEPTED" : "REJECTED",
              failures, total.seconds());
  return failures == 0 ? 0 : 1;
}
