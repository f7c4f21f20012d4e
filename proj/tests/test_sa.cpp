#include <doctest.h>

#include "oracles.hpp"
#include "rupmss/json_io.hpp"
#include "rupmss/sa.hpp"
#include "test_support.hpp"

using namespace rupmss;

namespace {

SaConfig quick_config(std::uint64_t seed) {
  SaConfig cfg;
  cfg.seed = seed;
  cfg.moves_per_temperature = 10;
  cfg.min_temperature_ratio = 0.05;
  return cfg;
}

}  // namespace

TEST_CASE("sa returns the zero-regret optimum on degenerate instances") {
  const Instance inst = testsupport::degenerate(4, 5, 2);
  const SaResult result = sa_solve(inst, quick_config(1));
  CHECK(result.report.r_max == 0);
}

TEST_CASE("the best-ever regret never exceeds the initial one") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Instance inst = testsupport::seeded(seed + 200, 5, 2);
    const SaResult result = sa_solve(inst, quick_config(seed));
    REQUIRE_FALSE(result.trace.empty());
    CHECK(result.trace.front().outcome == "initial");
    CHECK(result.report.r_max <= result.trace.front().value);
    // best-ever bookkeeping: no accepted candidate beats the reported best
    for (const auto& event : result.trace)
      if (event.outcome == "accepted") CHECK(result.report.r_max <= event.value);
  }
}

TEST_CASE("sa never beats the exhaustive robust optimum") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const Instance inst = testsupport::seeded(seed + 210, 6, 2);
    const SaResult result = sa_solve(inst, quick_config(seed));
    const auto opt = oracle::robust_opt(inst);
    CHECK(result.report.r_max >= opt.r_max);
    CHECK(result.report.r_max == oracle::max_regret(inst, result.schedule));
  }
}

TEST_CASE("temperatures decrease strictly and geometrically") {
  const Instance inst = testsupport::seeded(220, 5, 2);
  const SaResult result = sa_solve(inst, quick_config(9));
  REQUIRE(result.temperatures.size() >= 2);
  for (std::size_t t = 1; t < result.temperatures.size(); ++t) {
    CHECK(result.temperatures[t] < result.temperatures[t - 1]);
    CHECK(result.temperatures[t] ==
          doctest::Approx(result.temperatures[t - 1] * 0.95).epsilon(1e-12));
  }
}

TEST_CASE("sa is deterministic in the seed") {
  const Instance inst = testsupport::seeded(230, 5, 2);
  const SaConfig cfg = quick_config(7);
  const SaResult a = sa_solve(inst, cfg);
  const SaResult b = sa_solve(inst, cfg);
  CHECK(sa_result_to_json(a, cfg) == sa_result_to_json(b, cfg));
  CHECK(a.moves == b.moves);
}

TEST_CASE("single-machine instances return the start immediately") {
  const Instance inst = testsupport::seeded(240, 4, 1);
  const SaResult result = sa_solve(inst, quick_config(2));
  CHECK(result.moves == 0);
  CHECK(result.report.r_max == 0);  // one machine: the only assignment is optimal
}
