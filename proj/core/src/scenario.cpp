#include "rupmss/scenario.hpp"

#include <vector>

#include "rupmss/rng.hpp"

namespace rupmss {

namespace {

Scenario blank(const Instance& inst, std::string label) {
  Scenario scen;
  scen.p.assign(inst.num_machines, std::vector<Time>(inst.num_jobs + 1, 0));
  scen.label = std::move(label);
  return scen;
}

}  // namespace

Scenario extreme_scenario(const Instance& inst, const Schedule& sched, int machine) {
  // Jobs held by `machine` take their upper bound on that machine's own row;
  // everything else sits at the lower bound. This is the construction the
  // worst-case argument needs: it maximizes the completion of `machine`
  // while keeping every alternative placement of its jobs as cheap as
  // possible, which is what drives the scenario optimum down.
  std::vector<char> on_machine(inst.num_jobs + 1, 0);
  for (int job : sched.seq[machine]) on_machine[job] = 1;

  Scenario scen = blank(inst, "extreme(" + std::to_string(machine) + ")");
  for (int i = 0; i < inst.num_machines; ++i)
    for (int j = 1; j <= inst.num_jobs; ++j)
      scen.p[i][j] = (i == machine && on_machine[j]) ? inst.p_hi[i][j] : inst.p_lo[i][j];
  return scen;
}

Scenario mid_scenario(const Instance& inst) {
  Scenario scen = blank(inst, "mid");
  for (int i = 0; i < inst.num_machines; ++i)
    for (int j = 1; j <= inst.num_jobs; ++j)
      scen.p[i][j] = (inst.p_lo[i][j] + inst.p_hi[i][j] + 1) / 2;  // half-up
  return scen;
}

Scenario lower_scenario(const Instance& inst) {
  Scenario scen = blank(inst, "lower");
  for (int i = 0; i < inst.num_machines; ++i)
    for (int j = 1; j <= inst.num_jobs; ++j) scen.p[i][j] = inst.p_lo[i][j];
  return scen;
}

Scenario upper_scenario(const Instance& inst) {
  Scenario scen = blank(inst, "upper");
  for (int i = 0; i < inst.num_machines; ++i)
    for (int j = 1; j <= inst.num_jobs; ++j) scen.p[i][j] = inst.p_hi[i][j];
  return scen;
}

Scenario random_scenario(const Instance& inst, std::uint64_t seed) {
  Rng rng(seed);
  Scenario scen = blank(inst, "random(" + std::to_string(seed) + ")");
  for (int i = 0; i < inst.num_machines; ++i)
    for (int j = 1; j <= inst.num_jobs; ++j)
      scen.p[i][j] = rng.uniform(inst.p_lo[i][j], inst.p_hi[i][j]);
  return scen;
}

}  // namespace rupmss
