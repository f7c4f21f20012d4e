#include <doctest.h>

#include <algorithm>

#include "rupmss/json_io.hpp"
#include "rupmss/model.hpp"
#include "rupmss/scenario.hpp"
#include "test_support.hpp"

using namespace rupmss;

namespace {

bool any_mentions(const std::vector<std::string>& errors, const std::string& needle) {
  return std::any_of(errors.begin(), errors.end(), [&](const std::string& e) {
    return e.find(needle) != std::string::npos;
  });
}

}  // namespace

TEST_CASE("validation reports every violated invariant with indices") {
  Instance inst = testsupport::blank_instance(3, 2);
  inst.p_lo[0][1] = 5;
  inst.p_hi[0][1] = 3;
  inst.setup[0][2][2] = 4;

  const auto errors = validate_instance(inst);
  REQUIRE(errors.size() == 2);
  CHECK(any_mentions(errors, "interval inverted at (0,1)"));
  CHECK(any_mentions(errors, "self-setup nonzero at (0,2,2)"));
  CHECK_THROWS_AS(require_valid(inst), std::invalid_argument);
}

TEST_CASE("validation flags nonzero closing setups and dummy processing") {
  Instance inst = testsupport::blank_instance(2, 1);
  inst.setup[0][1][0] = 3;
  inst.p_hi[0][0] = 1;
  const auto errors = validate_instance(inst);
  CHECK(any_mentions(errors, "closing setup nonzero at (0,1,0)"));
  CHECK(any_mentions(errors, "dummy job processing nonzero on machine 0"));
}

TEST_CASE("generated instances respect the configured distributions") {
  const Instance inst = testsupport::seeded(1, 9, 3);
  CHECK(validate_instance(inst).empty());
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j <= 9; ++j)
      for (int k = 1; k <= 9; ++k) {
        if (j == k) continue;
        CHECK(inst.setup[i][j][k] >= 1);
        CHECK(inst.setup[i][j][k] <= 10);
      }
    for (int j = 1; j <= 9; ++j) {
      CHECK(inst.p_lo[i][j] >= 1);
      CHECK(inst.p_lo[i][j] <= 50);
      CHECK(inst.p_hi[i][j] >= inst.p_lo[i][j]);
      CHECK(inst.p_hi[i][j] <= 2 * inst.p_lo[i][j]);
    }
  }
}

TEST_CASE("generation is deterministic in the seed") {
  GeneratorConfig cfg;
  cfg.seed = 42;
  cfg.num_jobs = 7;
  cfg.num_machines = 2;
  const Instance a = generate_instance(cfg);
  const Instance b = generate_instance(cfg);
  CHECK(instance_to_json(a) == instance_to_json(b));
  cfg.seed = 43;
  CHECK_FALSE(generate_instance(cfg) == a);
}

TEST_CASE("the generator rejects empty dimensions") {
  GeneratorConfig cfg;
  cfg.num_jobs = 0;
  CHECK_THROWS_AS(generate_instance(cfg), std::invalid_argument);
  cfg.num_jobs = 3;
  cfg.num_machines = 0;
  CHECK_THROWS_AS(generate_instance(cfg), std::invalid_argument);
}

TEST_CASE("smallest generated case has one setup entry in range") {
  const Instance inst = testsupport::seeded(1, 1, 1);
  CHECK(inst.setup[0][0][1] >= 1);
  CHECK(inst.setup[0][0][1] <= 10);
  CHECK(validate_instance(inst).empty());
}

TEST_CASE("every generated instance validates") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Instance inst = testsupport::seeded(seed, 1 + seed % 9, 1 + seed % 3);
    CHECK(validate_instance(inst).empty());
  }
}

TEST_CASE("instance, schedule and scenario round-trip through JSON") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Instance inst = testsupport::seeded(seed, 4, 2);
    CHECK(instance_from_json(instance_to_json(inst)) == inst);

    const Scenario scen = random_scenario(inst, seed);
    CHECK(scenario_from_json(scenario_to_json(scen)) == scen);

    Schedule sched;
    sched.seq = {{1, 3}, {2, 4}};
    CHECK(schedule_from_json(schedule_to_json(sched)) == sched);
  }
}

TEST_CASE("parse errors name the offending field") {
  const Instance inst = testsupport::t1();
  std::string text = instance_to_json(inst);
  const auto pos = text.find("\"p_hi\"");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 6, "\"p_HI\"");
  CHECK_THROWS_WITH_AS(instance_from_json(text), doctest::Contains("p_hi"), std::runtime_error);

  CHECK_THROWS_WITH_AS(schedule_from_json("{\"format\":\"rupmss-schedule/1\"}"),
                       doctest::Contains("machines"), std::runtime_error);
  CHECK_THROWS_AS(instance_from_json("not json"), std::runtime_error);
  CHECK_THROWS_WITH_AS(instance_from_json("{\"format\":\"bogus/9\"}"),
                       doctest::Contains("format"), std::runtime_error);
}

TEST_CASE("schedules must partition the job set") {
  const Instance inst = testsupport::seeded(3, 3, 2);
  Schedule good;
  good.seq = {{1, 2}, {3}};
  CHECK(validate_schedule(inst, good).empty());

  Schedule twice;
  twice.seq = {{1, 2}, {2, 3}};
  CHECK(any_mentions(validate_schedule(inst, twice), "appears twice"));

  Schedule missing;
  missing.seq = {{1}, {3}};
  CHECK(any_mentions(validate_schedule(inst, missing), "unassigned"));
}

TEST_CASE("assignment view drops order but keeps machine identity") {
  Schedule sched;
  sched.seq = {{3, 1}, {2}};
  const auto sets = assignment_of(sched);
  CHECK(sets[0] == std::vector<int>{1, 3});
  CHECK(sets[1] == std::vector<int>{2});
}

TEST_CASE("mutated documents fail cleanly instead of crashing") {
  // deterministic corruption sweep over a valid document
  const Instance inst = testsupport::seeded(8, 4, 2);
  const std::string good = instance_to_json(inst);
  int parsed = 0, rejected = 0;
  for (std::size_t at = 0; at < good.size(); at += 7) {
    std::string bad = good;
    bad[at] = bad[at] == '3' ? '}' : '3';
    try {
      const Instance result = instance_from_json(bad);
      (void)result;
      ++parsed;  // a digit swap can still be a valid instance
    } catch (const std::exception&) {
      ++rejected;
    }
  }
  CHECK(parsed + rejected > 0);
  CHECK(rejected > 0);

  // truncations of every length must throw, never crash
  for (std::size_t len = 0; len < good.size(); len += 11)
    CHECK_THROWS_AS(instance_from_json(good.substr(0, len)), std::exception);
}
