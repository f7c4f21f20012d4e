#pragma once

#include <cstdint>
#include <optional>

#include "rupmss/model.hpp"

namespace rupmss {

enum class SolveMode { Exact, Heuristic };

struct DetSolverConfig {
  SolveMode mode = SolveMode::Exact;
  double time_limit_seconds = 60.0;
  std::uint64_t seed = 1;
  /// LP-relaxation bound; off by default so the solver stays dependency-free
  /// and LB = max(LB1, LB2) remains the operative bound.
  bool enable_lb3 = false;
  // bee-colony parameters
  int population = 20;
  int stagnation_limit = 50;
  long long iteration_budget = 2000;
};

struct DetSolveResult {
  Time makespan = 0;
  Schedule schedule;
  bool certified_optimal = false;
  Time lb1 = 0;
  Time lb2 = 0;
  std::optional<Time> lb3;
  Time lb = 0;  // max of the bounds present
  long long nodes_explored = 0;
  long long iterations = 0;
  double elapsed_seconds = 0;
};

/// (1/m) * sum over jobs of the cheapest (processing + predecessor setup)
/// placement, rounded up. Predecessors range over the dummy and all other
/// jobs; a job never precedes itself.
Time lb1(const Instance& inst, const Scenario& scen);

/// Cheapest placement of the single hardest job.
Time lb2(const Instance& inst, const Scenario& scen);

/// Lower bound from a linear relaxation of the assignment structure, solved
/// with a built-in simplex. Absent when disabled.
std::optional<Time> lb3(const Instance& inst, const Scenario& scen, bool enabled);

/// Branch-and-bound over job-to-machine assignments with exact subset-DP
/// sequencing at the leaves. Certified optimal when the search completes
/// within the time limit; otherwise returns the incumbent.
DetSolveResult solve_exact(const Instance& inst, const Scenario& scen,
                           const DetSolverConfig& cfg = {});

/// Bee-colony-style metaheuristic: population of schedules, employed and
/// onlooker perturbations (shift / interchange / intra-machine swap, each
/// followed by resequencing), scout restarts after stagnation. Never
/// certified; deterministic in the seed.
DetSolveResult solve_heuristic(const Instance& inst, const Scenario& scen,
                               const DetSolverConfig& cfg = {});

DetSolveResult solve_deterministic(const Instance& inst, const Scenario& scen,
                                   const DetSolverConfig& cfg);

}  // namespace rupmss
