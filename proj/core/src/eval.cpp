#include "rupmss/eval.hpp"

#include <stdexcept>

namespace rupmss {

MachineLoad machine_completion(const Instance& inst, const Schedule& sched,
                               const Scenario& scen, int machine) {
  MachineLoad load;
  load.machine = machine;
  int prev = 0;  // dummy opens the machine
  for (int job : sched.seq[machine]) {
    load.total_setup += inst.setup[machine][prev][job];
    load.total_processing += scen.p[machine][job];
    load.job_completions.push_back(load.total_setup + load.total_processing);
    prev = job;
  }
  load.completion = load.total_setup + load.total_processing;
  return load;
}

std::pair<Time, std::vector<int>> makespan(const Instance& inst, const Schedule& sched,
                                           const Scenario& scen) {
  Time value = 0;
  std::vector<int> critical;
  for (int i = 0; i < inst.num_machines; ++i) {
    const Time c = machine_completion(inst, sched, scen, i).completion;
    if (c > value) {
      value = c;
      critical.assign(1, i);
    } else if (c == value) {
      critical.push_back(i);
    }
  }
  return {value, critical};
}

CompletionInterval completion_interval(const Instance& inst, const Schedule& sched, int machine) {
  CompletionInterval interval;
  interval.machine = machine;
  int prev = 0;
  Time setup = 0;
  for (int job : sched.seq[machine]) {
    setup += inst.setup[machine][prev][job];
    interval.lo += inst.p_lo[machine][job];
    interval.hi += inst.p_hi[machine][job];
    prev = job;
  }
  interval.lo += setup;
  interval.hi += setup;
  return interval;
}

Time regret(const Instance& inst, const Schedule& sched, const Scenario& scen,
            Time f_star, bool f_star_exact) {
  const Time value = makespan(inst, sched, scen).first - f_star;
  if (value < 0 && f_star_exact)
    throw std::logic_error("negative regret against an exact optimum: inner solver is broken");
  return value;
}

}  // namespace rupmss
