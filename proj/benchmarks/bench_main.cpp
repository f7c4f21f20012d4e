#include <benchmark/benchmark.h>

#include "rupmss/detsolve.hpp"
#include "rupmss/ere.hpp"
#include "rupmss/mdh.hpp"
#include "rupmss/model.hpp"
#include "rupmss/scenario.hpp"
#include "rupmss/seqopt.hpp"

using namespace rupmss;

namespace {

Instance make_instance(int n, int m) {
  GeneratorConfig cfg;
  cfg.seed = 7;
  cfg.num_jobs = n;
  cfg.num_machines = m;
  return generate_instance(cfg);
}

Schedule spread(int n, int m) {
  Schedule sched;
  sched.seq.resize(m);
  for (int j = 1; j <= n; ++j) sched.seq[(j - 1) % m].push_back(j);
  return sched;
}

void BM_SubsetDpSequencing(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const Instance inst = make_instance(size, 1);
  std::vector<int> jobs(size);
  for (int j = 0; j < size; ++j) jobs[j] = j + 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimal_machine_sequence(inst, 0, jobs).total_setup);
  }
}
BENCHMARK(BM_SubsetDpSequencing)->Arg(8)->Arg(12)->Arg(15);

void BM_ExactDeterministicSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst = make_instance(n, 3);
  const Scenario scen = mid_scenario(inst);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_exact(inst, scen).makespan);
  }
}
BENCHMARK(BM_ExactDeterministicSolve)->Arg(6)->Arg(8)->Arg(10);

void BM_RegretEvaluation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst = make_instance(n, 3);
  const Schedule sched = spread(n, 3);
  const bool pruned = state.range(1) != 0;
  const EreConfig cfg = ere_mode_config(pruned ? "M23" : "ORIG");
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_regret(inst, sched, cfg).r_max);
  }
}
BENCHMARK(BM_RegretEvaluation)->Args({7, 0})->Args({7, 1})->Args({9, 0})->Args({9, 1});

void BM_MdhSolve(benchmark::State& state) {
  const Instance inst = make_instance(static_cast<int>(state.range(0)), 2);
  MdhConfig cfg;
  cfg.seed = 3;
  cfg.ere = ere_mode_config("M123");
  cfg.collect_trace = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mdh_solve(inst, cfg).report.r_max);
  }
}
BENCHMARK(BM_MdhSolve)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
