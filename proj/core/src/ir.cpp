#include "rupmss/ir.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "rupmss/eval.hpp"
#include "rupmss/scenario.hpp"
#include "rupmss/seqopt.hpp"
#include "rupmss/util.hpp"

namespace rupmss {

namespace {

constexpr Time kInf = std::numeric_limits<Time>::max() / 4;

std::vector<std::vector<Time>> cheapest_predecessor_setup(const Instance& inst) {
  const int n = inst.num_jobs;
  std::vector<std::vector<Time>> smin(inst.num_machines, std::vector<Time>(n + 1, 0));
  for (int i = 0; i < inst.num_machines; ++i)
    for (int k = 1; k <= n; ++k) {
      Time best = kInf;
      for (int j = 0; j <= n; ++j) {
        if (j == k) continue;
        best = std::min(best, inst.setup[i][j][k]);
      }
      smin[i][k] = best;
    }
  return smin;
}

/// Branch-and-bound over assignments minimizing the largest regret across a
/// fixed scenario set. One minimum-setup sequencing per machine is optimal
/// simultaneously for every scenario, so leaves only need the subset DP.
struct MasterSearch {
  const Instance& inst;
  const std::vector<IrScenarioRecord>& scenarios;
  int n, m;
  std::size_t s;
  std::vector<int> order;
  std::vector<std::vector<std::vector<Time>>> w;  // [scenario][machine][job]
  std::vector<std::vector<Time>> rem_min;         // [scenario][t]
  std::vector<std::vector<Time>> cur;             // [scenario][machine]
  std::vector<Time> cur_total;                    // [scenario]
  std::vector<std::vector<Time>> psum;            // [scenario][machine]
  std::vector<std::vector<int>> sets;
  std::vector<std::uint64_t> masks;
  Time best = kInf;
  Schedule best_schedule;
  long long nodes = 0;
  Deadline deadline;
  bool expired = false;
  bool use_memo = false;
  std::vector<std::unordered_map<std::uint64_t, Time>> setup_memo;

  MasterSearch(const Instance& instance, const std::vector<IrScenarioRecord>& scens,
               const Deadline& dl)
      : inst(instance), scenarios(scens), n(instance.num_jobs), m(instance.num_machines),
        s(scens.size()), deadline(dl) {
    const auto smin = cheapest_predecessor_setup(inst);
    w.assign(s, smin);
    for (std::size_t q = 0; q < s; ++q)
      for (int i = 0; i < m; ++i)
        for (int j = 1; j <= n; ++j) w[q][i][j] += scenarios[q].scenario.p[i][j];

    order.resize(n);
    for (int j = 0; j < n; ++j) order[j] = j + 1;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      Time pa = 0, pb = 0;
      for (std::size_t q = 0; q < s; ++q) {
        Time ba = kInf, bb = kInf;
        for (int i = 0; i < m; ++i) {
          ba = std::min(ba, scenarios[q].scenario.p[i][a]);
          bb = std::min(bb, scenarios[q].scenario.p[i][b]);
        }
        pa += ba;
        pb += bb;
      }
      if (pa != pb) return pa > pb;
      return a < b;
    });

    rem_min.assign(s, std::vector<Time>(n + 1, 0));
    for (std::size_t q = 0; q < s; ++q)
      for (int t = n - 1; t >= 0; --t) {
        Time best_w = kInf;
        for (int i = 0; i < m; ++i) best_w = std::min(best_w, w[q][i][order[t]]);
        rem_min[q][t] = rem_min[q][t + 1] + best_w;
      }

    cur.assign(s, std::vector<Time>(m, 0));
    cur_total.assign(s, 0);
    psum.assign(s, std::vector<Time>(m, 0));
    sets.assign(m, {});
    masks.assign(m, 0);
    use_memo = n < 64;
    setup_memo.resize(m);
  }

  Time machine_setup(int i) {
    if (!use_memo) return optimal_machine_sequence(inst, i, sets[i]).total_setup;
    auto [it, inserted] = setup_memo[i].try_emplace(masks[i], 0);
    if (inserted) it->second = optimal_machine_sequence(inst, i, sets[i]).total_setup;
    return it->second;
  }

  Time node_bound(int t) const {
    Time bound = 0;  // the objective is nonnegative: F(pi,s) >= F*_s
    for (std::size_t q = 0; q < s; ++q) {
      Time fq = 0;
      for (int i = 0; i < m; ++i) fq = std::max(fq, cur[q][i]);
      fq = std::max(fq, (cur_total[q] + rem_min[q][t] + m - 1) / m);
      bound = std::max(bound, fq - scenarios[q].f_star);
    }
    return bound;
  }

  void leaf() {
    std::vector<Time> setup(m);
    for (int i = 0; i < m; ++i) setup[i] = machine_setup(i);
    Time objective = 0;
    for (std::size_t q = 0; q < s; ++q) {
      Time fq = 0;
      for (int i = 0; i < m; ++i) fq = std::max(fq, setup[i] + psum[q][i]);
      objective = std::max(objective, fq - scenarios[q].f_star);
    }
    if (objective < best) {
      best = objective;
      best_schedule.seq.assign(m, {});
      for (int i = 0; i < m; ++i)
        best_schedule.seq[i] = optimal_machine_sequence(inst, i, sets[i]).sequence;
    }
  }

  void dfs(int t) {
    if ((++nodes & 1023) == 0 && deadline.expired()) expired = true;
    if (expired) return;
    if (node_bound(t) >= best) return;
    if (t == n) {
      leaf();
      return;
    }
    const int job = order[t];
    std::vector<int> machine_order(m);
    for (int i = 0; i < m; ++i) machine_order[i] = i;
    std::sort(machine_order.begin(), machine_order.end(), [&](int a, int b) {
      Time ca = 0, cb = 0;
      for (std::size_t q = 0; q < s; ++q) {
        ca = std::max(ca, cur[q][a]);
        cb = std::max(cb, cur[q][b]);
      }
      if (ca != cb) return ca < cb;
      return a < b;
    });
    for (int i : machine_order) {
      sets[i].push_back(job);
      masks[i] |= std::uint64_t{1} << job;
      for (std::size_t q = 0; q < s; ++q) {
        cur[q][i] += w[q][i][job];
        cur_total[q] += w[q][i][job];
        psum[q][i] += scenarios[q].scenario.p[i][job];
      }
      dfs(t + 1);
      for (std::size_t q = 0; q < s; ++q) {
        cur[q][i] -= w[q][i][job];
        cur_total[q] -= w[q][i][job];
        psum[q][i] -= scenarios[q].scenario.p[i][job];
      }
      masks[i] &= ~(std::uint64_t{1} << job);
      sets[i].pop_back();
      if (expired) return;
    }
  }
};

Time master_objective(const Instance& inst, const Schedule& sched,
                      const std::vector<IrScenarioRecord>& scenarios) {
  Time objective = 0;
  for (const auto& record : scenarios)
    objective = std::max(objective, makespan(inst, sched, record.scenario).first - record.f_star);
  return objective;
}

}  // namespace

MasterResult solve_master(const Instance& inst, const std::vector<IrScenarioRecord>& scenarios,
                          double time_limit_seconds, const Schedule* warm_start) {
  MasterResult result;
  if (scenarios.empty()) {
    // empty max convention: objective 0, any schedule is optimal
    std::vector<std::vector<int>> assignment(inst.num_machines);
    for (int j = 1; j <= inst.num_jobs; ++j) assignment[0].push_back(j);
    result.schedule = resequence(inst, assignment).schedule;
    result.objective = 0;
    return result;
  }

  MasterSearch search(inst, scenarios, Deadline(time_limit_seconds));
  if (warm_start != nullptr) {
    const Schedule warm = resequence(inst, assignment_of(*warm_start)).schedule;
    search.best = master_objective(inst, warm, scenarios);
    search.best_schedule = warm;
  }
  if (search.deadline.expired() && warm_start != nullptr) {
    search.expired = true;  // keep the warm incumbent, report it uncertified
  } else {
    search.dfs(0);
  }

  if (search.best_schedule.seq.empty())
    throw std::logic_error("master search ended without any feasible leaf");
  result.schedule = search.best_schedule;
  result.objective = search.best;
  result.certified = !search.expired;
  result.nodes = search.nodes;
  return result;
}

IrResult ir_solve(const Instance& inst, const EreConfig& ere, double time_limit_seconds) {
  const Deadline deadline(time_limit_seconds);
  Stopwatch watch;

  // Certification needs exact scenario optima throughout.
  EreConfig cfg = ere;
  cfg.inner_mode = SolveMode::Exact;
  cfg.enable_neighbor_lb = false;  // there is no incumbent to compare against

  IrResult result;
  FStarCache cache;

  DetSolverConfig det = cfg.inner;
  det.mode = SolveMode::Exact;
  Schedule current = solve_exact(inst, mid_scenario(inst), det).schedule;
  current = resequence(inst, assignment_of(current)).schedule;

  Time lower = 0;  // the empty relaxation
  Time upper = kInf;
  bool have_best = false;
  bool masters_certified = true;

  while (true) {
    const RegretReport report = evaluate_regret(inst, current, cfg, nullptr, &cache);
    result.stats.absorb(report);
    ++result.iterations;
    if (report.r_max < upper || !have_best) {
      upper = report.r_max;
      result.schedule = current;
      result.report = report;
      have_best = true;
    }
    result.history.push_back({result.iterations, lower, upper, watch.seconds()});

    if (upper == lower) {
      // lower only ever moves on certified masters, so equality certifies
      // optimality as long as the evaluation itself was exact
      result.converged = result.report.certified;
      break;
    }
    if (deadline.expired()) break;

    const int f = report.worst_scenario;
    if (f < 0) throw std::logic_error("non-converged evaluation produced no worst scenario");
    IrScenarioRecord record;
    record.scenario = extreme_scenario(inst, current, f);
    record.f_star = report.per_scenario[f].f_star.value();
    record.fingerprint = scenario_fingerprint(current, f);
    for (const auto& existing : result.scenarios)
      if (existing.fingerprint == record.fingerprint)
        throw std::logic_error("worst-case scenario regenerated before convergence");
    result.scenarios.push_back(std::move(record));

    const MasterResult master =
        solve_master(inst, result.scenarios, deadline.remaining_seconds(),
                     have_best ? &result.schedule : nullptr);
    masters_certified = masters_certified && master.certified;
    if (master.certified) lower = std::max(lower, master.objective);
    current = master.schedule;
    if (deadline.expired() && upper != lower) break;
  }

  result.lower = lower;
  result.upper = upper;
  return result;
}

}  // namespace rupmss
