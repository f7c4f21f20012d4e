#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rupmss/model.hpp"

namespace rupmss {

struct BenchRow {
  std::string instance_id;
  int n = 0;
  int m = 0;
  std::string algo;
  Time r_max = 0;
  bool certified = false;
  double elapsed_seconds = 0;
  long long inner_solves = 0;
  long long dominated = 0;
  long long lb_pruned = 0;
  long long neighbor_aborts = 0;
  std::optional<double> mid_gap;  // percent; empty when the reference is missing
  std::optional<double> ir_gap;
};

std::string bench_csv_header();
std::string to_csv(const BenchRow& row);
BenchRow bench_row_from_csv(const std::string& line);
std::vector<BenchRow> parse_bench_csv(const std::string& text);

/// (value - reference) / reference * 100; empty when the reference is absent
/// or zero.
std::optional<double> percent_gap(Time value, std::optional<Time> reference);

struct ScatterPoint {
  double x = 0;
  double y = 0;
  double scale = 0;  // m * n^2, drives the shade
};

/// Log-log scatter with a dashed y = x diagonal; points darken with instance
/// scale. Pure string emission.
std::string scatter_svg(const std::vector<ScatterPoint>& points, const std::string& x_label,
                        const std::string& y_label, const std::string& title);

}  // namespace rupmss
