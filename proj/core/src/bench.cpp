#include "rupmss/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace rupmss {

std::string bench_csv_header() {
  return "instance,n,m,algo,r_max,certified,elapsed_s,inner_solves,dominated,lb_pruned,"
         "neighbor_aborts,mid_gap,ir_gap";
}

namespace {

std::string format_double(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

std::string to_csv(const BenchRow& row) {
  std::string out = row.instance_id + "," + std::to_string(row.n) + "," + std::to_string(row.m) +
                    "," + row.algo + "," + std::to_string(row.r_max) + "," +
                    (row.certified ? "1" : "0") + "," + format_double(row.elapsed_seconds, 3) +
                    "," + std::to_string(row.inner_solves) + "," + std::to_string(row.dominated) +
                    "," + std::to_string(row.lb_pruned) + "," +
                    std::to_string(row.neighbor_aborts) + ",";
  if (row.mid_gap) out += format_double(*row.mid_gap, 4);
  out += ",";
  if (row.ir_gap) out += format_double(*row.ir_gap, 4);
  return out;
}

BenchRow bench_row_from_csv(const std::string& line) {
  const auto fields = split_fields(line);
  if (fields.size() != 13)
    throw std::runtime_error("bench row needs 13 fields, got " + std::to_string(fields.size()) +
                             ": " + line);
  BenchRow row;
  row.instance_id = fields[0];
  row.n = std::stoi(fields[1]);
  row.m = std::stoi(fields[2]);
  row.algo = fields[3];
  row.r_max = std::stoll(fields[4]);
  row.certified = fields[5] == "1";
  row.elapsed_seconds = std::stod(fields[6]);
  row.inner_solves = std::stoll(fields[7]);
  row.dominated = std::stoll(fields[8]);
  row.lb_pruned = std::stoll(fields[9]);
  row.neighbor_aborts = std::stoll(fields[10]);
  if (!fields[11].empty()) row.mid_gap = std::stod(fields[11]);
  if (!fields[12].empty()) row.ir_gap = std::stod(fields[12]);
  return row;
}

std::vector<BenchRow> parse_bench_csv(const std::string& text) {
  std::vector<BenchRow> rows;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line != bench_csv_header())
        throw std::runtime_error("unexpected bench CSV header: " + line);
      continue;
    }
    rows.push_back(bench_row_from_csv(line));
  }
  return rows;
}

std::optional<double> percent_gap(Time value, std::optional<Time> reference) {
  if (!reference || *reference == 0) return std::nullopt;
  return (static_cast<double>(value) - static_cast<double>(*reference)) /
         static_cast<double>(*reference) * 100.0;
}

std::string scatter_svg(const std::vector<ScatterPoint>& points, const std::string& x_label,
                        const std::string& y_label, const std::string& title) {
  constexpr double size = 640, margin = 60;
  constexpr double floor_value = 1e-3;  // log plot; zeros are clamped here

  double lo = 1e300, hi = -1e300;
  for (const auto& pt : points) {
    lo = std::min({lo, std::max(pt.x, floor_value), std::max(pt.y, floor_value)});
    hi = std::max({hi, pt.x, pt.y});
  }
  if (points.empty() || hi <= 0) {
    lo = floor_value;
    hi = 1.0;
  }
  const double log_lo = std::log10(lo) - 0.2;
  const double log_hi = std::log10(std::max(hi, lo * 10)) + 0.2;
  const auto place = [&](double v) {
    const double t = (std::log10(std::max(v, floor_value)) - log_lo) / (log_hi - log_lo);
    return margin + t * (size - 2 * margin);
  };

  double scale_hi = 1;
  for (const auto& pt : points) scale_hi = std::max(scale_hi, pt.scale);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << size / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
      << title << "</text>\n";
  svg << "<text x=\"" << size / 2 << "\" y=\"" << size - 12
      << "\" text-anchor=\"middle\" font-size=\"13\">" << x_label << " (log)</text>\n";
  svg << "<text x=\"16\" y=\"" << size / 2 << "\" text-anchor=\"middle\" font-size=\"13\" "
      << "transform=\"rotate(-90 16 " << size / 2 << ")\">" << y_label << " (log)</text>\n";
  svg << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << size - 2 * margin
      << "\" height=\"" << size - 2 * margin << "\" fill=\"none\" stroke=\"black\"/>\n";
  // y = x reference
  svg << "<line x1=\"" << place(std::pow(10, log_lo)) << "\" y1=\""
      << size - place(std::pow(10, log_lo)) << "\" x2=\"" << place(std::pow(10, log_hi))
      << "\" y2=\"" << size - place(std::pow(10, log_hi))
      << "\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>\n";
  for (const auto& pt : points) {
    const int shade = 210 - static_cast<int>(180.0 * pt.scale / scale_hi);
    svg << "<circle cx=\"" << place(pt.x) << "\" cy=\"" << size - place(pt.y)
        << "\" r=\"4.5\" fill=\"rgb(" << shade << "," << shade << ",255)\" stroke=\"black\" "
        << "stroke-width=\"0.4\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace rupmss
