#include <doctest.h>

#include "rupmss/bench.hpp"

using namespace rupmss;

TEST_CASE("bench rows round-trip through CSV") {
  BenchRow row;
  row.instance_id = "n5m2s1";
  row.n = 5;
  row.m = 2;
  row.algo = "mdh";
  row.r_max = 42;
  row.certified = true;
  row.elapsed_seconds = 1.234;
  row.inner_solves = 17;
  row.dominated = 3;
  row.lb_pruned = 4;
  row.neighbor_aborts = 5;
  row.mid_gap = -12.5;
  // ir_gap left empty

  const std::string text = bench_csv_header() + "\n" + to_csv(row) + "\n";
  const auto rows = parse_bench_csv(text);
  REQUIRE(rows.size() == 1);
  const BenchRow& parsed = rows[0];
  CHECK(parsed.instance_id == row.instance_id);
  CHECK(parsed.n == row.n);
  CHECK(parsed.m == row.m);
  CHECK(parsed.algo == row.algo);
  CHECK(parsed.r_max == row.r_max);
  CHECK(parsed.certified == row.certified);
  CHECK(parsed.elapsed_seconds == doctest::Approx(row.elapsed_seconds));
  CHECK(parsed.inner_solves == row.inner_solves);
  REQUIRE(parsed.mid_gap.has_value());
  CHECK(*parsed.mid_gap == doctest::Approx(-12.5));
  CHECK_FALSE(parsed.ir_gap.has_value());
}

TEST_CASE("csv header is stable and enforced") {
  CHECK(bench_csv_header() ==
        "instance,n,m,algo,r_max,certified,elapsed_s,inner_solves,dominated,lb_pruned,"
        "neighbor_aborts,mid_gap,ir_gap");
  CHECK_THROWS(parse_bench_csv("bogus,header\n"));
  CHECK_THROWS(bench_row_from_csv("too,few,fields"));
}

TEST_CASE("gap formula sign conventions") {
  CHECK(percent_gap(100, 100) == doctest::Approx(0.0));
  CHECK(percent_gap(90, 100) == doctest::Approx(-10.0));
  CHECK(percent_gap(110, 100) == doctest::Approx(10.0));
  CHECK_FALSE(percent_gap(5, std::nullopt).has_value());
  CHECK_FALSE(percent_gap(5, 0).has_value());
}

TEST_CASE("scatter svg renders one circle per point") {
  std::vector<ScatterPoint> points = {{1.0, 2.0, 75}, {10.0, 5.0, 300}, {0.0, 0.5, 147}};
  const std::string svg = scatter_svg(points, "time mdh", "time ir", "pairwise time");
  CHECK(svg.rfind("<svg", 0) == 0);
  std::size_t circles = 0, at = 0;
  while ((at = svg.find("<circle", at)) != std::string::npos) {
    ++circles;
    at += 7;
  }
  CHECK(circles == points.size());
  CHECK(svg.find("pairwise time") != std::string::npos);
}
