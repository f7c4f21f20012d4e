#include "rupmss/seqopt.hpp"

#include <algorithm>
#include <limits>

namespace rupmss {

namespace {

constexpr Time kInf = std::numeric_limits<Time>::max() / 4;

Time path_setup(const Instance& inst, int machine, const std::vector<int>& path) {
  Time total = 0;
  int prev = 0;
  for (int job : path) {
    total += inst.setup[machine][prev][job];
    prev = job;
  }
  return total;
}

/// Suffix DP over subsets: g[mask][l] is the cheapest setup cost of visiting
/// every job outside `mask` starting from jobs[l], with a free end. A greedy
/// forward pass over the DP then picks, position by position, the smallest
/// job index that still completes at the optimal total, which yields the
/// lexicographically smallest optimal sequence.
SequencingResult exact_sequence(const Instance& inst, int machine, std::vector<int> jobs) {
  std::sort(jobs.begin(), jobs.end());
  const int k = static_cast<int>(jobs.size());
  const int full = (1 << k) - 1;

  std::vector<std::vector<Time>> g(static_cast<std::size_t>(full) + 1, std::vector<Time>(k, kInf));
  for (int l = 0; l < k; ++l) g[full][l] = 0;
  for (int mask = full - 1; mask >= 1; --mask) {
    for (int l = 0; l < k; ++l) {
      if (!(mask >> l & 1)) continue;
      Time best = kInf;
      for (int r = 0; r < k; ++r) {
        if (mask >> r & 1) continue;
        const Time cost = inst.setup[machine][jobs[l]][jobs[r]] + g[mask | (1 << r)][r];
        best = std::min(best, cost);
      }
      g[mask][l] = best;
    }
  }

  Time total = kInf;
  for (int r = 0; r < k; ++r)
    total = std::min(total, inst.setup[machine][0][jobs[r]] + g[1 << r][r]);

  SequencingResult result;
  result.total_setup = total;
  result.sequence.reserve(k);
  int mask = 0, prev = 0;
  Time need = total;
  for (int step = 0; step < k; ++step) {
    for (int r = 0; r < k; ++r) {  // jobs sorted, so first feasible is smallest
      if (mask >> r & 1) continue;
      const Time edge = inst.setup[machine][prev][jobs[r]];
      if (edge + g[mask | (1 << r)][r] == need) {
        result.sequence.push_back(jobs[r]);
        need -= edge;
        mask |= 1 << r;
        prev = jobs[r];
        break;
      }
    }
  }
  return result;
}

/// Nearest-successor construction followed by first-improvement 2-opt
/// (segment reversal) and or-opt (relocating runs of 1..3 jobs). Costs are
/// recomputed from scratch; the sets this handles are small enough.
SequencingResult heuristic_sequence(const Instance& inst, int machine, std::vector<int> jobs) {
  std::sort(jobs.begin(), jobs.end());
  const int k = static_cast<int>(jobs.size());
  std::vector<int> path;
  std::vector<char> used(jobs.size(), 0);
  int prev = 0;
  for (int step = 0; step < k; ++step) {
    int pick = -1;
    Time best = kInf;
    for (int r = 0; r < k; ++r) {
      if (used[r]) continue;
      const Time cost = inst.setup[machine][prev][jobs[r]];
      if (cost < best) {
        best = cost;
        pick = r;
      }
    }
    used[pick] = 1;
    path.push_back(jobs[pick]);
    prev = jobs[pick];
  }

  Time cost = path_setup(inst, machine, path);
  bool improved = true;
  while (improved) {
    improved = false;
    for (int a = 0; a < k && !improved; ++a)
      for (int b = a + 1; b < k && !improved; ++b) {
        std::vector<int> candidate = path;
        std::reverse(candidate.begin() + a, candidate.begin() + b + 1);
        const Time c = path_setup(inst, machine, candidate);
        if (c < cost) {
          path = std::move(candidate);
          cost = c;
          improved = true;
        }
      }
    for (int len = 1; len <= 3 && !improved; ++len)
      for (int a = 0; a + len <= k && !improved; ++a)
        for (int to = 0; to + len <= k && !improved; ++to) {
          if (to == a) continue;
          std::vector<int> candidate = path;
          std::vector<int> segment(candidate.begin() + a, candidate.begin() + a + len);
          candidate.erase(candidate.begin() + a, candidate.begin() + a + len);
          candidate.insert(candidate.begin() + to, segment.begin(), segment.end());
          const Time c = path_setup(inst, machine, candidate);
          if (c < cost) {
            path = std::move(candidate);
            cost = c;
            improved = true;
          }
        }
  }

  SequencingResult result;
  result.sequence = std::move(path);
  result.total_setup = cost;
  result.certified = false;
  return result;
}

}  // namespace

SequencingResult optimal_machine_sequence(const Instance& inst, int machine,
                                          const std::vector<int>& jobs) {
  if (jobs.empty()) return {};
  if (static_cast<int>(jobs.size()) <= kExactSequencingThreshold)
    return exact_sequence(inst, machine, jobs);
  return heuristic_sequence(inst, machine, jobs);
}

ResequenceResult resequence(const Instance& inst, const std::vector<std::vector<int>>& assignment) {
  ResequenceResult result;
  result.schedule.seq.resize(assignment.size());
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    auto machine = optimal_machine_sequence(inst, static_cast<int>(i), assignment[i]);
    result.total_setup += machine.total_setup;
    result.certified = result.certified && machine.certified;
    result.schedule.seq[i] = std::move(machine.sequence);
  }
  return result;
}

}  // namespace rupmss
