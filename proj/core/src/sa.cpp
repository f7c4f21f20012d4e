#include "rupmss/sa.hpp"

#include <algorithm>
#include <cmath>

#include "rupmss/eval.hpp"
#include "rupmss/rng.hpp"
#include "rupmss/scenario.hpp"
#include "rupmss/seqopt.hpp"
#include "rupmss/util.hpp"

namespace rupmss {

namespace {

std::vector<int> job_to_machine(const Schedule& sched, int num_jobs) {
  std::vector<int> where(num_jobs + 1, -1);
  for (std::size_t i = 0; i < sched.seq.size(); ++i)
    for (int job : sched.seq[i]) where[job] = static_cast<int>(i);
  return where;
}

}  // namespace

SaResult sa_solve(const Instance& inst, const SaConfig& cfg) {
  const Deadline deadline(cfg.time_limit_seconds);
  const int n = inst.num_jobs;
  const int m = inst.num_machines;

  EreConfig ere = cfg.ere;
  ere.inner.seed = cfg.seed;

  SaResult result;
  FStarCache cache;
  Rng rng(cfg.seed);

  DetSolverConfig det = ere.inner;
  det.mode = ere.inner_mode;
  det.seed = mix_seed(cfg.seed, 0x5a);
  Schedule current = solve_deterministic(inst, mid_scenario(inst), det).schedule;
  current = resequence(inst, assignment_of(current)).schedule;
  // Metropolis needs the true regret of worsening moves, so candidates are
  // never evaluated against an incumbent here.
  RegretReport current_report = evaluate_regret(inst, current, ere, nullptr, &cache);
  result.stats.absorb(current_report);

  result.schedule = current;
  result.report = current_report;
  if (cfg.collect_trace)
    result.trace.push_back({0, "init", "mid", "initial", current_report.r_max});

  if (m < 2) return result;  // no shift or cross-machine interchange exists

  const double t0 = cfg.initial_temperature > 0
                        ? cfg.initial_temperature
                        : std::max<double>(1.0, static_cast<double>(current_report.r_max));
  const long long moves_per_stage =
      cfg.moves_per_temperature > 0 ? cfg.moves_per_temperature : 30LL * n;

  double temperature = t0;
  while (temperature >= cfg.min_temperature_ratio * t0) {
    if (deadline.expired()) {
      result.truncated = true;
      break;
    }
    for (long long step = 0; step < moves_per_stage; ++step) {
      if (deadline.expired()) {
        result.truncated = true;
        break;
      }
      auto where = job_to_machine(current, n);
      auto sets = assignment_of(current);
      std::string move;
      int touched_a = -1, touched_b = -1;
      const bool do_shift = n < 2 || rng.bounded(2) == 0;
      if (do_shift) {
        const int job = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n)));
        const int from = where[job];
        int to = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(m) - 1));
        if (to >= from) ++to;
        sets[from].erase(std::find(sets[from].begin(), sets[from].end(), job));
        sets[to].insert(std::lower_bound(sets[to].begin(), sets[to].end(), job), job);
        touched_a = from;
        touched_b = to;
        move = "j" + std::to_string(job) + " m" + std::to_string(from) + "->m" + std::to_string(to);
      } else {
        const int a = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n)));
        int b = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n) - 1));
        if (b >= a) ++b;
        if (where[a] == where[b]) continue;  // swap within one machine is a no-op
        const int ma = where[a];
        const int mb = where[b];
        sets[ma].erase(std::find(sets[ma].begin(), sets[ma].end(), a));
        sets[mb].erase(std::find(sets[mb].begin(), sets[mb].end(), b));
        sets[ma].insert(std::lower_bound(sets[ma].begin(), sets[ma].end(), b), b);
        sets[mb].insert(std::lower_bound(sets[mb].begin(), sets[mb].end(), a), a);
        touched_a = ma;
        touched_b = mb;
        move = "j" + std::to_string(a) + "<->j" + std::to_string(b);
      }

      Schedule neighbor = current;
      neighbor.seq[touched_a] = optimal_machine_sequence(inst, touched_a, sets[touched_a]).sequence;
      neighbor.seq[touched_b] = optimal_machine_sequence(inst, touched_b, sets[touched_b]).sequence;
      const RegretReport rep = evaluate_regret(inst, neighbor, ere, nullptr, &cache);
      result.stats.absorb(rep);
      ++result.moves;

      const Time delta = rep.r_max - current_report.r_max;
      const bool accept =
          delta <= 0 || rng.uniform01() < std::exp(-static_cast<double>(delta) / temperature);
      if (cfg.collect_trace)
        result.trace.push_back(
            {0, "anneal", move, accept ? "accepted" : "rejected", rep.r_max});
      if (accept) {
        current = std::move(neighbor);
        current_report = rep;
        if (current_report.r_max < result.report.r_max) {
          result.schedule = current;
          result.report = current_report;
        }
      }
    }
    result.temperatures.push_back(temperature);
    temperature *= cfg.cooling_rate;
  }
  return result;
}

}  // namespace rupmss
