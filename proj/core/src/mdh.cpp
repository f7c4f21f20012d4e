#include "rupmss/mdh.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rupmss/eval.hpp"
#include "rupmss/rng.hpp"
#include "rupmss/scenario.hpp"
#include "rupmss/seqopt.hpp"
#include "rupmss/util.hpp"

namespace rupmss {

BoundReport midpoint_upper_bound(const Instance& inst, Time f_star_mid_x2, bool certified) {
  long long a = 0, b = 1;  // alpha = a/b, maximized entrywise
  for (int i = 0; i < inst.num_machines; ++i)
    for (int j = 1; j <= inst.num_jobs; ++j) {
      const Time lo = inst.p_lo[i][j];
      const Time hi = inst.p_hi[i][j];
      if (lo == 0) {
        if (hi == 0) continue;  // fixed-zero entry deviates by nothing
        throw std::domain_error("alpha undefined: p_lo is zero with p_hi positive at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
      }
      const long long num = hi - lo;
      if (num * b > a * lo) {
        a = num;
        b = lo;
      }
    }
  const long long g = std::gcd(a, b);
  if (g > 1) {
    a /= g;
    b /= g;
  }

  BoundReport report;
  report.alpha_num = a;
  report.alpha_den = b;
  report.f_star_mid_x2 = f_star_mid_x2;
  report.f_star_certified = certified;
  // 2a/(2b+a) * (f_x2 / 2) = a * f_x2 / (2b + a)
  report.bound_num = a * f_star_mid_x2;
  report.bound_den = 2 * b + a;
  const long long gb = std::gcd(report.bound_num, report.bound_den);
  if (gb > 1) {
    report.bound_num /= gb;
    report.bound_den /= gb;
  }
  report.alpha = static_cast<double>(a) / static_cast<double>(b);
  report.bound = static_cast<double>(report.bound_num) / static_cast<double>(report.bound_den);
  return report;
}

MidpointSolve solve_midpoint(const Instance& inst, const DetSolverConfig& cfg) {
  // Interval midpoints may be half-integral; doubling every duration keeps
  // the arithmetic exact and preserves the optimal schedules.
  Instance doubled = inst;
  for (auto& slice : doubled.setup)
    for (auto& row : slice)
      for (auto& v : row) v *= 2;
  Scenario scen;
  scen.label = "mid";
  scen.p.assign(inst.num_machines, std::vector<Time>(inst.num_jobs + 1, 0));
  for (int i = 0; i < inst.num_machines; ++i)
    for (int j = 1; j <= inst.num_jobs; ++j) scen.p[i][j] = inst.p_lo[i][j] + inst.p_hi[i][j];
  for (int i = 0; i < inst.num_machines; ++i) {
    doubled.p_lo[i] = scen.p[i];
    doubled.p_hi[i] = scen.p[i];
  }

  const DetSolveResult solved = solve_deterministic(doubled, scen, cfg);
  MidpointSolve out;
  out.schedule = solved.schedule;
  out.f_star_x2 = solved.makespan;
  out.certified = solved.certified_optimal;
  return out;
}

namespace {

std::vector<int> job_to_machine(const Schedule& sched, int num_jobs) {
  std::vector<int> where(num_jobs + 1, -1);
  for (std::size_t i = 0; i < sched.seq.size(); ++i)
    for (int job : sched.seq[i]) where[job] = static_cast<int>(i);
  return where;
}

void push_trace(std::vector<TraceEvent>* trace, int start_index, const std::string& phase,
                std::string move, std::string outcome, Time value) {
  if (trace == nullptr) return;
  trace->push_back({start_index, phase, std::move(move), std::move(outcome), value});
}

std::string shift_move_name(int job, int from, int to) {
  return "j" + std::to_string(job) + " m" + std::to_string(from) + "->m" + std::to_string(to);
}

std::string swap_move_name(int a, int b) {
  return "j" + std::to_string(a) + "<->j" + std::to_string(b);
}

}  // namespace

SearchOutcome shift_search(const Instance& inst, const Schedule& start,
                           const RegretReport& start_report, const EreConfig& ere,
                           FStarCache* cache, EvalStats* stats,
                           std::vector<TraceEvent>* trace, int start_index,
                           const Deadline& deadline) {
  const int m = inst.num_machines;
  SearchOutcome out{start, start_report};
  if (m < 2) return out;

  bool improved = true;
  while (improved && !deadline.expired()) {
    improved = false;
    const int critical = out.report.worst_machine;
    if (critical < 0) break;
    const std::vector<int> critical_jobs = out.schedule.seq[critical];
    for (std::size_t p = 0; p < critical_jobs.size() && !improved; ++p) {
      const int job = critical_jobs[p];
      for (int target = 0; target < m && !improved; ++target) {
        if (target == critical) continue;
        if (deadline.expired()) return out;

        auto sets = assignment_of(out.schedule);
        sets[critical].erase(std::find(sets[critical].begin(), sets[critical].end(), job));
        sets[target].insert(std::lower_bound(sets[target].begin(), sets[target].end(), job), job);
        Schedule neighbor = out.schedule;
        neighbor.seq[critical] = optimal_machine_sequence(inst, critical, sets[critical]).sequence;
        neighbor.seq[target] = optimal_machine_sequence(inst, target, sets[target]).sequence;

        const Incumbent incumbent{&out.schedule, out.report.r_max};
        const RegretReport rep = evaluate_regret(inst, neighbor, ere, &incumbent, cache);
        if (stats != nullptr) stats->absorb(rep);
        const std::string move = shift_move_name(job, critical, target);
        if (rep.aborted_by_neighbor_lb) {
          push_trace(trace, start_index, "shift", move, "aborted", rep.neighbor_lb_value);
          continue;
        }
        if (rep.r_max < out.report.r_max) {
          push_trace(trace, start_index, "shift", move, "accepted", rep.r_max);
          out.schedule = std::move(neighbor);
          out.report = rep;
          improved = true;  // back to step 1: rescan from the new critical machine
        } else {
          push_trace(trace, start_index, "shift", move, "rejected", rep.r_max);
        }
      }
    }
  }
  return out;
}

SearchOutcome interchange_search(const Instance& inst, const Schedule& start,
                                 const RegretReport& start_report, const EreConfig& ere,
                                 FStarCache* cache, EvalStats* stats,
                                 std::vector<TraceEvent>* trace, int start_index,
                                 const Deadline& deadline) {
  const int n = inst.num_jobs;
  SearchOutcome out{start, start_report};
  if (n < 2) return out;

  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
  const long long total = static_cast<long long>(pairs.size());

  auto where = job_to_machine(out.schedule, n);
  long long since_improvement = 0;
  std::size_t cursor = 0;
  while (since_improvement < total && !deadline.expired()) {
    const auto [a, b] = pairs[cursor];
    cursor = (cursor + 1) % pairs.size();
    ++since_improvement;

    const int critical = out.report.worst_machine;
    const int ma = where[a];
    const int mb = where[b];
    // only swaps across machines with one end on the critical machine can help
    if (ma == mb || (ma != critical && mb != critical)) continue;

    auto sets = assignment_of(out.schedule);
    sets[ma].erase(std::find(sets[ma].begin(), sets[ma].end(), a));
    sets[mb].erase(std::find(sets[mb].begin(), sets[mb].end(), b));
    sets[ma].insert(std::lower_bound(sets[ma].begin(), sets[ma].end(), b), b);
    sets[mb].insert(std::lower_bound(sets[mb].begin(), sets[mb].end(), a), a);
    Schedule neighbor = out.schedule;
    neighbor.seq[ma] = optimal_machine_sequence(inst, ma, sets[ma]).sequence;
    neighbor.seq[mb] = optimal_machine_sequence(inst, mb, sets[mb]).sequence;

    const Incumbent incumbent{&out.schedule, out.report.r_max};
    const RegretReport rep = evaluate_regret(inst, neighbor, ere, &incumbent, cache);
    if (stats != nullptr) stats->absorb(rep);
    const std::string move = swap_move_name(a, b);
    if (rep.aborted_by_neighbor_lb) {
      push_trace(trace, start_index, "interchange", move, "aborted", rep.neighbor_lb_value);
      continue;
    }
    if (rep.r_max < out.report.r_max) {
      push_trace(trace, start_index, "interchange", move, "accepted", rep.r_max);
      out.schedule = std::move(neighbor);
      out.report = rep;
      where = job_to_machine(out.schedule, n);
      since_improvement = 0;
    } else {
      push_trace(trace, start_index, "interchange", move, "rejected", rep.r_max);
    }
  }
  return out;
}

MdhResult mdh_solve(const Instance& inst, const MdhConfig& cfg) {
  const Deadline deadline(cfg.time_limit_seconds);
  MdhResult result;
  std::vector<TraceEvent>* trace = cfg.collect_trace ? &result.trace : nullptr;

  EreConfig ere = cfg.ere;
  ere.inner.seed = cfg.seed;

  bool have_best = false;
  std::vector<std::vector<std::vector<int>>> seen;
  for (int r = 0; r < cfg.init_count; ++r) {
    // the first start always runs so there is a solution to return; the
    // descents themselves bail out early once the deadline passes
    if (r > 0 && deadline.expired()) {
      result.truncated = true;
      break;
    }

    DetSolverConfig det = ere.inner;
    det.mode = ere.inner_mode;
    det.seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(r));

    std::string label;
    Schedule initial;
    if (r == 0) {
      const MidpointSolve mid = solve_midpoint(inst, det);
      initial = mid.schedule;
      label = "mid";
      try {
        result.bound = midpoint_upper_bound(inst, mid.f_star_x2, mid.certified);
      } catch (const std::domain_error&) {
        // alpha undefined for this instance; no bound to report
      }
    } else if (r == 1) {
      const Scenario scen = upper_scenario(inst);
      label = scen.label;
      initial = solve_deterministic(inst, scen, det).schedule;
    } else if (r == 2) {
      const Scenario scen = lower_scenario(inst);
      label = scen.label;
      initial = solve_deterministic(inst, scen, det).schedule;
    } else {
      const Scenario scen = random_scenario(inst, cfg.seed + static_cast<std::uint64_t>(r - 2));
      label = scen.label;
      initial = solve_deterministic(inst, scen, det).schedule;
    }

    auto assignment = assignment_of(initial);
    initial = resequence(inst, assignment).schedule;

    MdhStart record;
    record.index = r;
    record.scenario = label;
    if (std::find(seen.begin(), seen.end(), assignment) != seen.end()) {
      record.skipped_duplicate = true;
      push_trace(trace, r, "init", label, "duplicate", 0);
      result.starts.push_back(record);
      continue;
    }
    seen.push_back(assignment);

    FStarCache cache;  // isolated per start
    const RegretReport init_report = evaluate_regret(inst, initial, ere, nullptr, &cache);
    result.stats.absorb(init_report);
    push_trace(trace, r, "init", label, "initial", init_report.r_max);
    record.initial_r_max = init_report.r_max;

    SearchOutcome outcome = shift_search(inst, initial, init_report, ere, &cache,
                                         &result.stats, trace, r, deadline);
    outcome = interchange_search(inst, outcome.schedule, outcome.report, ere, &cache,
                                 &result.stats, trace, r, deadline);
    record.final_r_max = outcome.report.r_max;
    result.starts.push_back(record);

    if (!have_best || outcome.report.r_max < result.report.r_max) {
      have_best = true;
      result.schedule = std::move(outcome.schedule);
      result.report = std::move(outcome.report);
    }
    if (deadline.expired() && r + 1 < cfg.init_count) {
      result.truncated = true;
      break;
    }
  }
  return result;
}

}  // namespace rupmss
