#pragma once

#include <optional>
#include <vector>

namespace rupmss::lp {

/// Minimizes c.x subject to A x = b, x >= 0, with b >= 0. Two-phase dense
/// tableau simplex with Bland's rule. Returns the optimal objective value,
/// or nullopt when infeasible or unbounded.
std::optional<double> simplex_min(const std::vector<std::vector<double>>& A,
                                  const std::vector<double>& b,
                                  const std::vector<double>& c);

}  // namespace rupmss::lp
