#include "simplex.hpp"

#include <cmath>
#include <cstddef>

namespace rupmss::lp {

namespace {

constexpr double kEps = 1e-9;

struct Tableau {
  std::size_t rows, cols;                // constraint rows, variable columns
  std::vector<std::vector<double>> t;    // rows x (cols + 1), last column is rhs
  std::vector<double> z;                 // reduced costs, size cols + 1
  std::vector<std::size_t> basis;        // basic column per row

  void pivot(std::size_t row, std::size_t col) {
    const double p = t[row][col];
    for (auto& v : t[row]) v /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || std::fabs(t[i][col]) < kEps) continue;
      const double f = t[i][col];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[row][j];
    }
    const double f = z[col];
    if (std::fabs(f) > 0)
      for (std::size_t j = 0; j <= cols; ++j) z[j] -= f * t[row][j];
    basis[row] = col;
  }

  void reset_costs(const std::vector<double>& cost) {
    z.assign(cols + 1, 0.0);
    for (std::size_t j = 0; j < cols; ++j) z[j] = cost[j];
    for (std::size_t i = 0; i < rows; ++i) {
      const double cb = cost[basis[i]];
      if (std::fabs(cb) < kEps) continue;
      for (std::size_t j = 0; j <= cols; ++j) z[j] -= cb * t[i][j];
    }
  }

  // Bland's rule: smallest eligible entering column, smallest basic index on
  // ratio ties. Returns false when no entering column exists (optimal).
  bool iterate(std::size_t allowed_cols, bool* unbounded) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < allowed_cols; ++j)
      if (z[j] < -kEps) {
        enter = j;
        break;
      }
    if (enter == cols) return false;

    std::size_t leave = rows;
    double best_ratio = 0;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= kEps) continue;
      const double ratio = t[i][cols] / t[i][enter];
      if (leave == rows || ratio < best_ratio - kEps ||
          (ratio < best_ratio + kEps && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == rows) {
      *unbounded = true;
      return false;
    }
    pivot(leave, enter);
    return true;
  }
};

}  // namespace

std::optional<double> simplex_min(const std::vector<std::vector<double>>& A,
                                  const std::vector<double>& b,
                                  const std::vector<double>& c) {
  const std::size_t rows = A.size();
  const std::size_t real = c.size();
  Tableau tab;
  tab.rows = rows;
  tab.cols = real + rows;  // one artificial per row
  tab.t.assign(rows, std::vector<double>(tab.cols + 1, 0.0));
  tab.basis.resize(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < real; ++j) tab.t[i][j] = A[i][j];
    tab.t[i][real + i] = 1.0;
    tab.t[i][tab.cols] = b[i];
    tab.basis[i] = real + i;
  }

  // Phase 1: drive the artificials to zero.
  std::vector<double> phase1(tab.cols, 0.0);
  for (std::size_t j = real; j < tab.cols; ++j) phase1[j] = 1.0;
  tab.reset_costs(phase1);
  bool unbounded = false;
  while (tab.iterate(tab.cols, &unbounded)) {
  }
  if (unbounded || -tab.z[tab.cols] > 1e-6) return std::nullopt;

  // Kick remaining zero-valued artificials out of the basis where possible.
  for (std::size_t i = 0; i < rows; ++i) {
    if (tab.basis[i] < real) continue;
    for (std::size_t j = 0; j < real; ++j)
      if (std::fabs(tab.t[i][j]) > kEps) {
        tab.pivot(i, j);
        break;
      }
  }

  // Phase 2 over the real columns only.
  std::vector<double> phase2(tab.cols, 0.0);
  for (std::size_t j = 0; j < real; ++j) phase2[j] = c[j];
  tab.reset_costs(phase2);
  unbounded = false;
  while (tab.iterate(real, &unbounded)) {
  }
  if (unbounded) return std::nullopt;
  return -tab.z[tab.cols];
}

}  // namespace rupmss::lp
