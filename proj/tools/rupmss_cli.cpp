#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "rupmss/bench.hpp"
#include "rupmss/eval.hpp"
#include "rupmss/ir.hpp"
#include "rupmss/json_io.hpp"
#include "rupmss/mdh.hpp"
#include "rupmss/model.hpp"
#include "rupmss/sa.hpp"
#include "rupmss/scenario.hpp"
#include "rupmss/seqopt.hpp"
#include "rupmss/util.hpp"

namespace fs = std::filesystem;
using namespace rupmss;

namespace {

// exit codes: 0 ok, 1 usage, 2 runtime
constexpr int kUsageError = 1;
constexpr int kRuntimeError = 2;

struct GenerateArgs {
  std::uint64_t seed = 1;
  int jobs = 9;
  int machines = 3;
  int count = 1;
  std::string out_dir = ".";
};

int run_generate(const GenerateArgs& args) {
  fs::create_directories(args.out_dir);
  std::ostringstream manifest;
  manifest << "{\n \"format\": \"rupmss-manifest/1\",\n \"instances\": [";
  for (int idx = 0; idx < args.count; ++idx) {
    GeneratorConfig cfg;
    cfg.seed = args.seed + static_cast<std::uint64_t>(idx);
    cfg.num_jobs = args.jobs;
    cfg.num_machines = args.machines;
    const Instance inst = generate_instance(cfg);
    const std::string name =
        "n" + std::to_string(args.jobs) + "m" + std::to_string(args.machines) + "s" +
        std::to_string(idx) + ".inst.json";
    write_file((fs::path(args.out_dir) / name).string(), instance_to_json(inst));
    if (idx > 0) manifest << ",";
    manifest << "\n  {\"file\": \"" << name << "\", \"seed\": " << cfg.seed << "}";
  }
  manifest << (args.count > 0 ? "\n ]" : "]") << "\n}\n";
  write_file((fs::path(args.out_dir) / "manifest.json").string(), manifest.str());
  std::cout << "wrote " << args.count << " instance(s) to " << args.out_dir << "\n";
  return 0;
}

struct SolveArgs {
  std::string instance;
  std::string algo;
  std::string mode = "M123";
  std::string inner;  // empty = follow mode
  double time_limit = 60.0;
  std::uint64_t seed = 1;
  int init_count = 5;
  long long inner_budget = 0;  // 0 = library default
  std::string out;  // prefix; default derives from the instance path
};

EreConfig build_ere(const std::string& mode, const std::string& inner, long long inner_budget = 0) {
  EreConfig cfg = ere_mode_config(mode);
  if (inner == "exact") cfg.inner_mode = SolveMode::Exact;
  if (inner == "heuristic") cfg.inner_mode = SolveMode::Heuristic;
  if (inner_budget > 0) cfg.inner.iteration_budget = inner_budget;
  return cfg;
}

std::string default_prefix(const std::string& path, const std::string& ext) {
  std::string prefix = path;
  if (prefix.size() > ext.size() && prefix.substr(prefix.size() - ext.size()) == ext)
    prefix.resize(prefix.size() - ext.size());
  return prefix;
}

Instance load_instance(const std::string& path) { return instance_from_json(read_file(path)); }

int run_solve(const SolveArgs& args) {
  const Instance inst = load_instance(args.instance);
  const std::string prefix =
      args.out.empty() ? default_prefix(args.instance, ".inst.json") : args.out;
  const EreConfig ere = build_ere(args.mode, args.inner, args.inner_budget);

  Schedule schedule;
  std::string report_json;
  if (args.algo == "mdh") {
    MdhConfig cfg;
    cfg.seed = args.seed;
    cfg.time_limit_seconds = args.time_limit;
    cfg.init_count = args.init_count;
    cfg.ere = ere;
    const MdhResult result = mdh_solve(inst, cfg);
    schedule = result.schedule;
    report_json = mdh_result_to_json(result, cfg);
    write_file(prefix + ".trace.jsonl", trace_to_json_lines(result.trace));
    std::cout << "mdh r_max=" << result.report.r_max
              << " certified_eval=" << (result.report.certified ? "true" : "false")
              << (result.truncated ? " (truncated)" : "") << "\n";
  } else if (args.algo == "ir") {
    const IrResult result = ir_solve(inst, ere, args.time_limit);
    schedule = result.schedule;
    report_json = ir_result_to_json(result);
    write_file(prefix + ".history.csv", ir_history_csv(result));
    std::cout << "ir r_max=" << result.report.r_max << " lower=" << result.lower
              << " upper=" << result.upper
              << " certified=" << (result.converged ? "true" : "false") << "\n";
  } else if (args.algo == "sa") {
    SaConfig cfg;
    cfg.seed = args.seed;
    cfg.time_limit_seconds = args.time_limit;
    cfg.ere = ere;
    const SaResult result = sa_solve(inst, cfg);
    schedule = result.schedule;
    report_json = sa_result_to_json(result, cfg);
    write_file(prefix + ".trace.jsonl", trace_to_json_lines(result.trace));
    std::cout << "sa r_max=" << result.report.r_max << " moves=" << result.moves
              << (result.truncated ? " (truncated)" : "") << "\n";
  }
  write_file(prefix + ".sched.json", schedule_to_json(schedule));
  write_file(prefix + ".report.json", report_json);
  return 0;
}

struct EvaluateArgs {
  std::string instance;
  std::string schedule;
  std::string mode = "ORIG";
  std::string inner;
  std::string incumbent;
  std::string out;
};

int run_evaluate(const EvaluateArgs& args) {
  const Instance inst = load_instance(args.instance);
  const Schedule sched = schedule_from_json(read_file(args.schedule));
  const auto errors = validate_schedule(inst, sched);
  if (!errors.empty()) {
    std::string joined = "schedule does not fit the instance:";
    for (const auto& e : errors) joined += "\n  " + e;
    throw std::runtime_error(joined);
  }
  const EreConfig ere = build_ere(args.mode, args.inner);

  RegretReport report;
  if (!args.incumbent.empty()) {
    const Schedule incumbent_sched = schedule_from_json(read_file(args.incumbent));
    if (!validate_schedule(inst, incumbent_sched).empty())
      throw std::runtime_error("incumbent schedule does not fit the instance");
    // the incumbent's own maximum regret anchors the neighbor bound
    EreConfig base = ere;
    base.enable_neighbor_lb = false;
    const RegretReport incumbent_report = evaluate_regret(inst, incumbent_sched, base);
    const Incumbent incumbent{&incumbent_sched, incumbent_report.r_max};
    report = evaluate_regret(inst, sched, ere, &incumbent);
  } else {
    report = evaluate_regret(inst, sched, ere);
  }

  const std::string out = args.out.empty()
                              ? default_prefix(args.schedule, ".sched.json") + ".report.json"
                              : args.out;
  write_file(out, report_to_json(report));
  std::cout << "mode=" << args.mode << " r_max=" << report.r_max
            << " inner_solves=" << report.inner_solves
            << " aborted=" << (report.aborted_by_neighbor_lb ? "true" : "false") << "\n";
  return 0;
}

struct BenchArgs {
  std::vector<int> jobs = {5, 7, 9};
  std::vector<int> machines = {2, 3};
  int seeds = 5;
  std::uint64_t base_seed = 1;
  double time_limit = 60.0;
  std::string inner = "exact";
  std::vector<std::string> algos = {"mdh", "ir", "sa"};
  std::string out_dir;
  int parallel = 0;  // 0 = env or 1
};

struct BenchCell {
  std::string id;
  Instance inst;
  int n = 0, m = 0;
};

std::vector<BenchRow> run_bench_cell(const BenchCell& cell, const BenchArgs& args) {
  std::vector<BenchRow> rows;
  const EreConfig ere = build_ere("M123", args.inner);

  const auto make_row = [&](const std::string& algo, Time r_max, bool certified, double elapsed,
                            const EvalStats& stats) {
    BenchRow row;
    row.instance_id = cell.id;
    row.n = cell.n;
    row.m = cell.m;
    row.algo = algo;
    row.r_max = r_max;
    row.certified = certified;
    row.elapsed_seconds = elapsed;
    row.inner_solves = stats.inner_solves;
    row.dominated = stats.dominated;
    row.lb_pruned = stats.lb_pruned;
    row.neighbor_aborts = stats.neighbor_aborts;
    return row;
  };

  // reference: the midpoint-scenario initial solution
  std::optional<Time> mid_reference;
  {
    Stopwatch watch;
    DetSolverConfig det = ere.inner;
    det.mode = ere.inner_mode;
    det.seed = args.base_seed;
    const MidpointSolve mid = solve_midpoint(cell.inst, det);
    EreConfig plain = ere;
    plain.enable_neighbor_lb = false;
    EvalStats stats;
    const RegretReport report = evaluate_regret(cell.inst, mid.schedule, plain);
    stats.absorb(report);
    mid_reference = report.r_max;
    rows.push_back(
        make_row("mid", report.r_max, report.certified && mid.certified, watch.seconds(), stats));
  }

  std::optional<Time> ir_reference;
  for (const std::string& algo : args.algos) {
    Stopwatch watch;
    if (algo == "mdh") {
      MdhConfig cfg;
      cfg.seed = args.base_seed;
      cfg.time_limit_seconds = args.time_limit;
      cfg.ere = ere;
      cfg.collect_trace = false;
      const MdhResult result = mdh_solve(cell.inst, cfg);
      rows.push_back(make_row("mdh", result.report.r_max, result.report.certified, watch.seconds(),
                              result.stats));
    } else if (algo == "ir") {
      const IrResult result = ir_solve(cell.inst, ere, args.time_limit);
      ir_reference = result.report.r_max;
      rows.push_back(
          make_row("ir", result.report.r_max, result.converged, watch.seconds(), result.stats));
    } else if (algo == "sa") {
      SaConfig cfg;
      cfg.seed = args.base_seed;
      cfg.time_limit_seconds = args.time_limit;
      cfg.ere = ere;
      cfg.collect_trace = false;
      const SaResult result = sa_solve(cell.inst, cfg);
      rows.push_back(make_row("sa", result.report.r_max, result.report.certified, watch.seconds(),
                              result.stats));
    } else {
      throw std::runtime_error("unknown algorithm in --algos: " + algo);
    }
  }

  for (auto& row : rows) {
    row.mid_gap = percent_gap(row.r_max, mid_reference);
    if (!row.mid_gap && row.algo != "mid")
      std::cerr << "warning: mid reference is zero for " << cell.id << "; mid_gap left empty\n";
    row.ir_gap = percent_gap(row.r_max, ir_reference);
  }
  return rows;
}

int run_bench(const BenchArgs& args) {
  fs::create_directories(args.out_dir);
  std::vector<BenchCell> cells;
  std::uint64_t next_seed = args.base_seed;
  for (int n : args.jobs)
    for (int m : args.machines)
      for (int s = 0; s < args.seeds; ++s) {
        GeneratorConfig cfg;
        cfg.seed = next_seed++;
        cfg.num_jobs = n;
        cfg.num_machines = m;
        BenchCell cell;
        cell.id = "n" + std::to_string(n) + "m" + std::to_string(m) + "s" + std::to_string(s);
        cell.inst = generate_instance(cfg);
        cell.n = n;
        cell.m = m;
        write_file((fs::path(args.out_dir) / (cell.id + ".inst.json")).string(),
                   instance_to_json(cell.inst));
        cells.push_back(std::move(cell));
      }

  int parallel = args.parallel;
  if (parallel <= 0) {
    if (const char* env = std::getenv("RUPMSS_BENCH_JOBS")) parallel = std::atoi(env);
    if (parallel <= 0) parallel = 1;
  }
  parallel = std::min<int>(parallel, static_cast<int>(cells.empty() ? 1 : cells.size()));

  std::vector<std::vector<BenchRow>> results(cells.size());
  std::atomic<std::size_t> cursor{0};
  std::mutex log_mutex;
  const auto worker = [&]() {
    while (true) {
      const std::size_t at = cursor.fetch_add(1);
      if (at >= cells.size()) return;
      results[at] = run_bench_cell(cells[at], args);
      std::lock_guard<std::mutex> lock(log_mutex);
      std::cout << "done " << cells[at].id << "\n";
    }
  };
  if (parallel <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < parallel; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<BenchRow> rows;
  for (auto& cell_rows : results) rows.insert(rows.end(), cell_rows.begin(), cell_rows.end());
  std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    if (a.instance_id != b.instance_id) return a.instance_id < b.instance_id;
    return a.algo < b.algo;
  });
  std::string csv = bench_csv_header() + "\n";
  for (const auto& row : rows) csv += to_csv(row) + "\n";
  const std::string csv_path = (fs::path(args.out_dir) / "bench.csv").string();
  write_file(csv_path, csv);
  std::cout << "wrote " << rows.size() << " rows to " << csv_path << "\n";
  return 0;
}

struct ReportArgs {
  std::string csv;
  std::string svg_dir;
};

int run_report(const ReportArgs& args) {
  const auto rows = parse_bench_csv(read_file(args.csv));
  std::map<std::string, const BenchRow*> by_key;  // instance|algo
  for (const auto& row : rows) by_key[row.instance_id + "|" + row.algo] = &row;

  struct Aggregate {
    int count = 0, opt = 0, gap_count = 0, ir_gap_count = 0;
    double mid_gap_sum = 0, ir_gap_sum = 0, time_sum = 0;
  };
  std::map<std::tuple<int, int, std::string>, Aggregate> groups;
  for (const auto& row : rows) {
    auto& agg = groups[{row.n, row.m, row.algo}];
    ++agg.count;
    agg.time_sum += row.elapsed_seconds;
    if (row.mid_gap) {
      agg.mid_gap_sum += *row.mid_gap;
      ++agg.gap_count;
    }
    if (row.ir_gap) {
      agg.ir_gap_sum += *row.ir_gap;
      ++agg.ir_gap_count;
    }
    // optimal iff the IR run certified and the algorithm matched its value
    const auto ir_it = by_key.find(row.instance_id + "|ir");
    if (ir_it != by_key.end() && ir_it->second->certified && row.r_max == ir_it->second->r_max)
      ++agg.opt;
  }

  std::printf("%4s %4s %-6s %6s %10s %10s %8s %10s\n", "n", "m", "algo", "runs", "mid-gap%",
              "ir-gap%", "#opt", "time(s)");
  for (const auto& [key, agg] : groups) {
    const auto& [n, m, algo] = key;
    char mid_text[32] = "-";
    char ir_text[32] = "-";
    if (agg.gap_count) std::snprintf(mid_text, sizeof(mid_text), "%.2f", agg.mid_gap_sum / agg.gap_count);
    if (agg.ir_gap_count)
      std::snprintf(ir_text, sizeof(ir_text), "%.2f", agg.ir_gap_sum / agg.ir_gap_count);
    std::printf("%4d %4d %-6s %6d %10s %10s %8d %10.3f\n", n, m, algo.c_str(), agg.count, mid_text,
                ir_text, agg.opt, agg.time_sum / agg.count);
  }

  if (!args.svg_dir.empty()) {
    fs::create_directories(args.svg_dir);
    const auto scatter = [&](const std::string& a, const std::string& b, bool time,
                             const std::string& file) {
      std::vector<ScatterPoint> points;
      for (const auto& row : rows) {
        if (row.algo != a) continue;
        const auto other = by_key.find(row.instance_id + "|" + b);
        if (other == by_key.end()) continue;
        ScatterPoint pt;
        pt.x = time ? row.elapsed_seconds : static_cast<double>(row.r_max);
        pt.y = time ? other->second->elapsed_seconds : static_cast<double>(other->second->r_max);
        pt.scale = static_cast<double>(row.m) * row.n * row.n;
        points.push_back(pt);
      }
      if (points.empty()) return;
      const std::string kind = time ? "time" : "regret";
      write_file((fs::path(args.svg_dir) / file).string(),
                 scatter_svg(points, a + " " + kind, b + " " + kind, kind + ": " + a + " vs " + b));
    };
    scatter("mdh", "ir", false, "regret_mdh_ir.svg");
    scatter("mdh", "ir", true, "time_mdh_ir.svg");
    scatter("mdh", "sa", false, "regret_mdh_sa.svg");
    scatter("mdh", "sa", true, "time_mdh_sa.svg");
    std::cout << "scatter plots written to " << args.svg_dir << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"robust min-max regret scheduling on unrelated parallel machines"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "write seeded instance files");
  generate->add_option("--seed", gen.seed, "base seed");
  generate->add_option("--jobs", gen.jobs, "number of jobs")->required();
  generate->add_option("--machines", gen.machines, "number of machines")->required();
  generate->add_option("--count", gen.count, "number of instances")->check(CLI::NonNegativeNumber);
  generate->add_option("--out-dir", gen.out_dir, "output directory");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "run a solver on an instance file");
  solve_cmd->add_option("--instance", solve.instance, "instance file")->required();
  solve_cmd->add_option("--algo", solve.algo, "algorithm")
      ->required()
      ->check(CLI::IsMember({"mdh", "ir", "sa"}));
  solve_cmd->add_option("--mode", solve.mode, "evaluation mechanisms")
      ->check(CLI::IsMember({"ORIG", "M3", "M23", "M123", "M1234"}));
  solve_cmd->add_option("--inner", solve.inner, "inner deterministic solver")
      ->check(CLI::IsMember({"exact", "heuristic"}));
  solve_cmd->add_option("--time-limit", solve.time_limit, "seconds per solve");
  solve_cmd->add_option("--seed", solve.seed, "solver seed");
  solve_cmd->add_option("--init", solve.init_count, "number of mdh starts");
  solve_cmd->add_option("--inner-budget", solve.inner_budget,
                        "iteration budget of the heuristic inner solver");
  solve_cmd->add_option("--out", solve.out, "output path prefix");

  EvaluateArgs eval_args;
  auto* evaluate = app.add_subcommand("evaluate", "maximum regret of a schedule file");
  evaluate->add_option("--instance", eval_args.instance, "instance file")->required();
  evaluate->add_option("--schedule", eval_args.schedule, "schedule file")->required();
  evaluate->add_option("--mode", eval_args.mode, "ORIG | M3 | M23 | M123 | M1234")
      ->check(CLI::IsMember({"ORIG", "M3", "M23", "M123", "M1234"}));
  evaluate->add_option("--inner", eval_args.inner, "override the inner solver")
      ->check(CLI::IsMember({"exact", "heuristic"}));
  evaluate->add_option("--incumbent", eval_args.incumbent, "incumbent schedule file");
  evaluate->add_option("--out", eval_args.out, "report output path");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "run the benchmark matrix");
  bench_cmd->add_option("--out-dir", bench.out_dir, "output directory")->required();
  bench_cmd->add_option("--jobs", bench.jobs, "job counts");
  bench_cmd->add_option("--machines", bench.machines, "machine counts");
  bench_cmd->add_option("--seeds", bench.seeds, "instances per combination");
  bench_cmd->add_option("--seed", bench.base_seed, "base seed");
  bench_cmd->add_option("--time-limit", bench.time_limit, "seconds per solve");
  bench_cmd->add_option("--inner", bench.inner, "inner deterministic solver")
      ->check(CLI::IsMember({"exact", "heuristic"}));
  bench_cmd->add_option("--algos", bench.algos, "algorithms to run");
  bench_cmd->add_option("--jobs-parallel", bench.parallel,
                        "concurrent cells (default: RUPMSS_BENCH_JOBS or 1)");

  ReportArgs report;
  auto* report_cmd = app.add_subcommand("report", "aggregate a bench CSV");
  report_cmd->add_option("--csv", report.csv, "bench.csv path")->required();
  report_cmd->add_option("--svg-dir", report.svg_dir, "emit scatter SVGs here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*solve_cmd) return run_solve(solve);
    if (*evaluate) return run_evaluate(eval_args);
    if (*bench_cmd) return run_bench(bench);
    if (*report_cmd) return run_report(report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
  return 0;
}
