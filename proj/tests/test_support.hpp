#pragma once

#include "rupmss/model.hpp"

namespace testsupport {

/// All-zero valid instance skeleton for hand-built cases.
inline rupmss::Instance blank_instance(int n, int m) {
  rupmss::Instance inst;
  inst.num_jobs = n;
  inst.num_machines = m;
  inst.setup.assign(m, std::vector<std::vector<rupmss::Time>>(
                           n + 1, std::vector<rupmss::Time>(n + 1, 0)));
  inst.p_lo.assign(m, std::vector<rupmss::Time>(n + 1, 0));
  inst.p_hi.assign(m, std::vector<rupmss::Time>(n + 1, 0));
  return inst;
}

/// Small seeded reference instance reused across suites.
inline rupmss::Instance t1() {
  rupmss::GeneratorConfig cfg;
  cfg.seed = 1;
  cfg.num_jobs = 3;
  cfg.num_machines = 2;
  return rupmss::generate_instance(cfg);
}

inline rupmss::Instance seeded(std::uint64_t seed, int n, int m) {
  rupmss::GeneratorConfig cfg;
  cfg.seed = seed;
  cfg.num_jobs = n;
  cfg.num_machines = m;
  return rupmss::generate_instance(cfg);
}

/// Degenerate-interval instance (p_lo == p_hi): a single-scenario problem.
inline rupmss::Instance degenerate(std::uint64_t seed, int n, int m) {
  rupmss::Instance inst = seeded(seed, n, m);
  inst.p_hi = inst.p_lo;
  return inst;
}

}  // namespace testsupport
