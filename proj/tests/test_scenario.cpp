#include <doctest.h>

#include "rupmss/model.hpp"
#include "rupmss/scenario.hpp"
#include "test_support.hpp"

using namespace rupmss;

TEST_CASE("extreme scenario raises held jobs on the machine's own row only") {
  Instance inst = testsupport::blank_instance(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      inst.p_lo[i][j] = 2;
      inst.p_hi[i][j] = 9;
    }
  Schedule sched;
  sched.seq = {{1}, {2}};
  const Scenario scen = extreme_scenario(inst, sched, 0);
  CHECK(scen.p[0][1] == 9);  // job 1 sits on machine 0: upper bound there
  CHECK(scen.p[1][1] == 2);  // but stays cheap anywhere it could move to
  CHECK(scen.p[0][2] == 2);
  CHECK(scen.p[1][2] == 2);
}

TEST_CASE("extreme scenario degenerates at the boundaries") {
  const Instance inst = testsupport::seeded(2, 4, 2);
  Schedule all_on_0;
  all_on_0.seq = {{1, 2, 3, 4}, {}};
  // everything on machine 0: its row is fully raised, the rest stays low
  const Scenario loaded = extreme_scenario(inst, all_on_0, 0);
  CHECK(loaded.p[0] == upper_scenario(inst).p[0]);
  CHECK(loaded.p[1] == lower_scenario(inst).p[1]);
  // an empty machine produces the all-lower scenario
  CHECK(extreme_scenario(inst, all_on_0, 1).p == lower_scenario(inst).p);
}

TEST_CASE("extreme scenario ignores the order of jobs on the machine") {
  const Instance inst = testsupport::seeded(3, 4, 2);
  Schedule a, b;
  a.seq = {{1, 3}, {2, 4}};
  b.seq = {{3, 1}, {4, 2}};
  CHECK(extreme_scenario(inst, a, 0).p == extreme_scenario(inst, b, 0).p);
}

TEST_CASE("midpoints round half up and stay inside the interval") {
  Instance inst = testsupport::blank_instance(2, 1);
  inst.p_lo[0][1] = 2;
  inst.p_hi[0][1] = 4;
  inst.p_lo[0][2] = 1;
  inst.p_hi[0][2] = 4;  // midpoint 2.5 rounds to 3
  const Scenario mid = mid_scenario(inst);
  CHECK(mid.p[0][1] == 3);
  CHECK(mid.p[0][2] == 3);
}

TEST_CASE("degenerate intervals collapse all deterministic scenarios") {
  const Instance inst = testsupport::degenerate(4, 3, 2);
  CHECK(mid_scenario(inst).p == lower_scenario(inst).p);
  CHECK(upper_scenario(inst).p == lower_scenario(inst).p);
  CHECK(random_scenario(inst, 99).p == lower_scenario(inst).p);
}

TEST_CASE("every constructed scenario satisfies the interval invariants") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Instance inst = testsupport::seeded(seed, 6, 3);
    CHECK(validate_scenario(inst, mid_scenario(inst)).empty());
    CHECK(validate_scenario(inst, lower_scenario(inst)).empty());
    CHECK(validate_scenario(inst, upper_scenario(inst)).empty());
    CHECK(validate_scenario(inst, random_scenario(inst, seed)).empty());
    Schedule sched;
    sched.seq = {{1, 4}, {2, 5}, {3, 6}};
    for (int f = 0; f < 3; ++f)
      CHECK(validate_scenario(inst, extreme_scenario(inst, sched, f)).empty());
  }
}

TEST_CASE("random scenarios are deterministic in the seed") {
  const Instance inst = testsupport::seeded(5, 5, 2);
  CHECK(random_scenario(inst, 7).p == random_scenario(inst, 7).p);
  CHECK(random_scenario(inst, 7).p != random_scenario(inst, 8).p);
}

TEST_CASE("random draws cover the interval with a sane mean") {
  Instance inst = testsupport::blank_instance(1, 1);
  inst.p_lo[0][1] = 0;
  inst.p_hi[0][1] = 1;
  long long sum = 0;
  const int draws = 1000;
  for (int d = 0; d < draws; ++d) sum += random_scenario(inst, 1000 + d).p[0][1];
  const double mean = static_cast<double>(sum) / draws;
  CHECK(mean >= 0.4);
  CHECK(mean <= 0.6);
}
