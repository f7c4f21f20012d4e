#include "rupmss/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rupmss/rng.hpp"

namespace rupmss {

std::vector<std::string> validate_instance(const Instance& inst) {
  std::vector<std::string> errors;
  const int n = inst.num_jobs;
  const int m = inst.num_machines;
  auto fail = [&errors](const std::string& msg) { errors.push_back(msg); };

  if (n < 1) fail("num_jobs must be positive");
  if (m < 1) fail("num_machines must be positive");
  if (static_cast<int>(inst.setup.size()) != m) fail("setup tensor must have one slice per machine");
  if (static_cast<int>(inst.p_lo.size()) != m) fail("p_lo must have one row per machine");
  if (static_cast<int>(inst.p_hi.size()) != m) fail("p_hi must have one row per machine");
  if (!errors.empty()) return errors;

  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(inst.setup[i].size()) != n + 1) {
      fail("setup slice of machine " + std::to_string(i) + " must have n+1 rows");
      continue;
    }
    for (int j = 0; j <= n; ++j) {
      if (static_cast<int>(inst.setup[i][j].size()) != n + 1) {
        fail("setup row (" + std::to_string(i) + "," + std::to_string(j) + ") must have n+1 entries");
        continue;
      }
      for (int k = 0; k <= n; ++k) {
        std::ostringstream at;
        at << "(" << i << "," << j << "," << k << ")";
        if (inst.setup[i][j][k] < 0) fail("negative setup at " + at.str());
        if (j == k && inst.setup[i][j][k] != 0) fail("self-setup nonzero at " + at.str());
        if (k == 0 && inst.setup[i][j][k] != 0) fail("closing setup nonzero at " + at.str());
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(inst.p_lo[i].size()) != n + 1 ||
        static_cast<int>(inst.p_hi[i].size()) != n + 1) {
      fail("processing rows of machine " + std::to_string(i) + " must have n+1 entries");
      continue;
    }
    if (inst.p_lo[i][0] != 0 || inst.p_hi[i][0] != 0)
      fail("dummy job processing nonzero on machine " + std::to_string(i));
    for (int j = 1; j <= n; ++j) {
      std::ostringstream at;
      at << "(" << i << "," << j << ")";
      if (inst.p_lo[i][j] < 0) fail("negative p_lo at " + at.str());
      if (inst.p_lo[i][j] > inst.p_hi[i][j]) fail("interval inverted at " + at.str());
    }
  }
  return errors;
}

void require_valid(const Instance& inst) {
  const auto errors = validate_instance(inst);
  if (errors.empty()) return;
  std::string joined = "invalid instance:";
  for (const auto& e : errors) joined += "\n  " + e;
  throw std::invalid_argument(joined);
}

std::vector<std::string> validate_schedule(const Instance& inst, const Schedule& sched) {
  std::vector<std::string> errors;
  const int n = inst.num_jobs;
  if (static_cast<int>(sched.seq.size()) != inst.num_machines) {
    errors.push_back("schedule must have one sequence per machine");
    return errors;
  }
  std::vector<int> seen(n + 1, 0);
  for (const auto& machine : sched.seq) {
    for (int job : machine) {
      if (job < 1 || job > n) {
        errors.push_back("job index " + std::to_string(job) + " out of range");
        continue;
      }
      if (++seen[job] > 1) errors.push_back("job " + std::to_string(job) + " appears twice");
    }
  }
  for (int j = 1; j <= n; ++j)
    if (seen[j] == 0) errors.push_back("job " + std::to_string(j) + " unassigned");
  return errors;
}

std::vector<std::string> validate_scenario(const Instance& inst, const Scenario& scen) {
  std::vector<std::string> errors;
  const int n = inst.num_jobs;
  const int m = inst.num_machines;
  if (static_cast<int>(scen.p.size()) != m) {
    errors.push_back("scenario must have one row per machine");
    return errors;
  }
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(scen.p[i].size()) != n + 1) {
      errors.push_back("scenario row " + std::to_string(i) + " must have n+1 entries");
      continue;
    }
    if (scen.p[i][0] != 0) errors.push_back("dummy column nonzero at machine " + std::to_string(i));
    for (int j = 1; j <= n; ++j) {
      if (scen.p[i][j] < inst.p_lo[i][j] || scen.p[i][j] > inst.p_hi[i][j]) {
        std::ostringstream at;
        at << "(" << i << "," << j << ")";
        errors.push_back("processing time outside interval at " + at.str());
      }
    }
  }
  return errors;
}

Instance generate_instance(const GeneratorConfig& cfg) {
  if (cfg.num_jobs < 1 || cfg.num_machines < 1)
    throw std::invalid_argument("generator needs at least one job and one machine");
  const int n = cfg.num_jobs;
  const int m = cfg.num_machines;
  Rng rng(cfg.seed);

  Instance inst;
  inst.num_jobs = n;
  inst.num_machines = m;
  inst.setup.assign(m, std::vector<std::vector<Time>>(n + 1, std::vector<Time>(n + 1, 0)));
  inst.p_lo.assign(m, std::vector<Time>(n + 1, 0));
  inst.p_hi.assign(m, std::vector<Time>(n + 1, 0));

  // Fixed draw order keeps one seed producing one instance forever.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (j == k) continue;
        inst.setup[i][j][k] = rng.uniform(cfg.setup_min, cfg.setup_max);
      }
  for (int i = 0; i < m; ++i)
    for (int j = 1; j <= n; ++j) {
      const Time lo = rng.uniform(cfg.p_lo_min, cfg.p_lo_max);
      inst.p_lo[i][j] = lo;
      inst.p_hi[i][j] = rng.uniform(lo, cfg.hi_factor * lo);
    }
  return inst;
}

std::vector<std::vector<int>> assignment_of(const Schedule& sched) {
  std::vector<std::vector<int>> sets(sched.seq.size());
  for (std::size_t i = 0; i < sched.seq.size(); ++i) {
    sets[i] = sched.seq[i];
    std::sort(sets[i].begin(), sets[i].end());
  }
  return sets;
}

bool operator==(const Instance& a, const Instance& b) {
  return a.num_jobs == b.num_jobs && a.num_machines == b.num_machines && a.setup == b.setup &&
         a.p_lo == b.p_lo && a.p_hi == b.p_hi;
}

bool operator==(const Scenario& a, const Scenario& b) {
  return a.p == b.p && a.label == b.label;
}

bool operator==(const Schedule& a, const Schedule& b) { return a.seq == b.seq; }

}  // namespace rupmss
