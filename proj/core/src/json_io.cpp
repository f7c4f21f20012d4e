#include "rupmss/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rupmss {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kInstanceFormat = "rupmss-instance/1";
constexpr const char* kScheduleFormat = "rupmss-schedule/1";
constexpr const char* kScenarioFormat = "rupmss-scenario/1";

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end()) throw std::runtime_error(std::string("missing field: ") + name);
  return *it;
}

void check_format(const json& doc, const char* expected) {
  const auto& tag = field(doc, "format");
  if (!tag.is_string() || tag.get<std::string>() != expected)
    throw std::runtime_error(std::string("field format: expected \"") + expected + "\"");
}

std::vector<std::vector<Time>> parse_matrix(const json& value, const char* name) {
  if (!value.is_array()) throw std::runtime_error(std::string("field ") + name + ": expected array");
  std::vector<std::vector<Time>> out;
  for (const auto& row : value) {
    if (!row.is_array())
      throw std::runtime_error(std::string("field ") + name + ": expected array of arrays");
    std::vector<Time> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw std::runtime_error(std::string("field ") + name + ": expected integer entries");
      r.push_back(v.get<Time>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string status_name(ScenarioStatus status) {
  switch (status) {
    case ScenarioStatus::Evaluated: return "evaluated";
    case ScenarioStatus::Dominated: return "dominated";
    case ScenarioStatus::LbPruned: return "lb_pruned";
    case ScenarioStatus::Unreached: return "unreached";
  }
  return "unreached";
}

json report_json(const RegretReport& report) {
  json doc;
  doc["r_max"] = report.r_max;
  doc["worst_scenario"] = report.worst_scenario;
  doc["worst_machine"] = report.worst_machine;
  doc["certified"] = report.certified;
  doc["inner_mode"] = report.inner_mode == SolveMode::Exact ? "exact" : "heuristic";
  doc["inner_solves"] = report.inner_solves;
  doc["aborted_by_neighbor_lb"] = report.aborted_by_neighbor_lb;
  if (report.aborted_by_neighbor_lb) doc["neighbor_lb"] = report.neighbor_lb_value;
  doc["pruning"] = {{"dominated", report.dominated_count}, {"lb_pruned", report.lb_pruned_count}};
  json scenarios = json::array();
  for (const auto& entry : report.per_scenario) {
    json e;
    e["machine"] = entry.machine;
    e["f_pi"] = entry.f_pi;
    e["status"] = status_name(entry.status);
    if (entry.f_star) e["f_star"] = *entry.f_star;
    if (entry.regret) e["regret"] = *entry.regret;
    if (entry.lower_bound) e["lower_bound"] = *entry.lower_bound;
    if (entry.dominated_by >= 0) e["dominated_by"] = entry.dominated_by;
    if (entry.inner_from_cache) e["from_cache"] = true;
    scenarios.push_back(std::move(e));
  }
  doc["per_scenario"] = std::move(scenarios);
  return doc;
}

json stats_json(const EvalStats& stats) {
  return {{"evaluations", stats.evaluations},
          {"inner_solves", stats.inner_solves},
          {"dominated", stats.dominated},
          {"lb_pruned", stats.lb_pruned},
          {"neighbor_aborts", stats.neighbor_aborts}};
}

json schedule_json(const Schedule& sched) {
  json machines = json::array();
  for (const auto& seq : sched.seq) machines.push_back(seq);
  return machines;
}

std::string rational(long long num, long long den) {
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
  json doc;
  doc["format"] = kInstanceFormat;
  doc["n"] = inst.num_jobs;
  doc["m"] = inst.num_machines;
  doc["setup"] = inst.setup;
  doc["p_lo"] = inst.p_lo;
  doc["p_hi"] = inst.p_hi;
  return doc.dump(1) + "\n";
}

Instance instance_from_json(const std::string& text) {
  const json doc = parse_document(text);
  check_format(doc, kInstanceFormat);
  Instance inst;
  const auto& n = field(doc, "n");
  const auto& m = field(doc, "m");
  if (!n.is_number_integer()) throw std::runtime_error("field n: expected integer");
  if (!m.is_number_integer()) throw std::runtime_error("field m: expected integer");
  inst.num_jobs = n.get<int>();
  inst.num_machines = m.get<int>();
  const auto& setup = field(doc, "setup");
  if (!setup.is_array()) throw std::runtime_error("field setup: expected array");
  for (const auto& slice : setup) inst.setup.push_back(parse_matrix(slice, "setup"));
  inst.p_lo = parse_matrix(field(doc, "p_lo"), "p_lo");
  inst.p_hi = parse_matrix(field(doc, "p_hi"), "p_hi");
  require_valid(inst);
  return inst;
}

std::string schedule_to_json(const Schedule& sched) {
  json doc;
  doc["format"] = kScheduleFormat;
  doc["machines"] = schedule_json(sched);
  return doc.dump(1) + "\n";
}

Schedule schedule_from_json(const std::string& text) {
  const json doc = parse_document(text);
  check_format(doc, kScheduleFormat);
  const auto& machines = field(doc, "machines");
  if (!machines.is_array()) throw std::runtime_error("field machines: expected array");
  Schedule sched;
  for (const auto& seq : machines) {
    if (!seq.is_array()) throw std::runtime_error("field machines: expected array of arrays");
    std::vector<int> jobs;
    for (const auto& v : seq) {
      if (!v.is_number_integer())
        throw std::runtime_error("field machines: expected integer job indices");
      jobs.push_back(v.get<int>());
    }
    sched.seq.push_back(std::move(jobs));
  }
  return sched;
}

std::string scenario_to_json(const Scenario& scen) {
  json doc;
  doc["format"] = kScenarioFormat;
  doc["label"] = scen.label;
  doc["p"] = scen.p;
  return doc.dump(1) + "\n";
}

Scenario scenario_from_json(const std::string& text) {
  const json doc = parse_document(text);
  check_format(doc, kScenarioFormat);
  Scenario scen;
  const auto& label = field(doc, "label");
  if (!label.is_string()) throw std::runtime_error("field label: expected string");
  scen.label = label.get<std::string>();
  scen.p = parse_matrix(field(doc, "p"), "p");
  return scen;
}

std::string report_to_json(const RegretReport& report) {
  json doc;
  doc["format"] = "rupmss-report/1";
  doc.update(report_json(report));
  return doc.dump(1) + "\n";
}

std::string mdh_result_to_json(const MdhResult& result, const MdhConfig& cfg) {
  json doc;
  doc["format"] = "rupmss-solve-report/1";
  doc["algo"] = "mdh";
  doc["config"] = {{"seed", cfg.seed},
                   {"init_count", cfg.init_count},
                   {"time_limit_s", cfg.time_limit_seconds},
                   {"ere_mode", ere_mode_name(cfg.ere)},
                   {"inner_mode", cfg.ere.inner_mode == SolveMode::Exact ? "exact" : "heuristic"}};
  doc["r_max"] = result.report.r_max;
  doc["certified_evaluation"] = result.report.certified;
  doc["truncated"] = result.truncated;
  if (result.bound) {
    doc["midpoint_bound"] = {{"alpha", rational(result.bound->alpha_num, result.bound->alpha_den)},
                             {"f_star_mid_x2", result.bound->f_star_mid_x2},
                             {"bound", rational(result.bound->bound_num, result.bound->bound_den)},
                             {"bound_value", result.bound->bound},
                             {"certified", result.bound->f_star_certified}};
  } else {
    doc["midpoint_bound"] = nullptr;
  }
  json starts = json::array();
  for (const auto& start : result.starts) {
    json s;
    s["index"] = start.index;
    s["scenario"] = start.scenario;
    s["duplicate"] = start.skipped_duplicate;
    if (!start.skipped_duplicate) {
      s["initial_r_max"] = start.initial_r_max;
      s["final_r_max"] = start.final_r_max;
    }
    starts.push_back(std::move(s));
  }
  doc["starts"] = std::move(starts);
  doc["stats"] = stats_json(result.stats);
  doc["evaluation"] = report_json(result.report);
  doc["schedule"] = schedule_json(result.schedule);
  return doc.dump(1) + "\n";
}

std::string ir_result_to_json(const IrResult& result) {
  json doc;
  doc["format"] = "rupmss-solve-report/1";
  doc["algo"] = "ir";
  doc["r_max"] = result.report.r_max;
  doc["lower"] = result.lower;
  doc["upper"] = result.upper;
  doc["converged"] = result.converged;
  doc["iterations"] = result.iterations;
  doc["scenario_set_size"] = result.scenarios.size();
  // history timing lives in the separate CSV; the report stays byte-stable
  json history = json::array();
  for (const auto& row : result.history)
    history.push_back({{"h", row.iteration}, {"lower", row.lower}, {"upper", row.upper}});
  doc["history"] = std::move(history);
  doc["stats"] = stats_json(result.stats);
  doc["evaluation"] = report_json(result.report);
  doc["schedule"] = schedule_json(result.schedule);
  return doc.dump(1) + "\n";
}

std::string sa_result_to_json(const SaResult& result, const SaConfig& cfg) {
  json doc;
  doc["format"] = "rupmss-solve-report/1";
  doc["algo"] = "sa";
  doc["config"] = {{"seed", cfg.seed},
                   {"cooling_rate", cfg.cooling_rate},
                   {"time_limit_s", cfg.time_limit_seconds},
                   {"ere_mode", ere_mode_name(cfg.ere)},
                   {"inner_mode", cfg.ere.inner_mode == SolveMode::Exact ? "exact" : "heuristic"}};
  doc["r_max"] = result.report.r_max;
  doc["moves"] = result.moves;
  doc["stages"] = result.temperatures.size();
  doc["truncated"] = result.truncated;
  doc["stats"] = stats_json(result.stats);
  doc["evaluation"] = report_json(result.report);
  doc["schedule"] = schedule_json(result.schedule);
  return doc.dump(1) + "\n";
}

std::string detsolve_result_to_json(const DetSolveResult& result) {
  json doc;
  doc["format"] = "rupmss-solve-report/1";
  doc["algo"] = "detsolve";
  doc["makespan"] = result.makespan;
  doc["certified_optimal"] = result.certified_optimal;
  json bounds;
  bounds["lb1"] = result.lb1;
  bounds["lb2"] = result.lb2;
  if (result.lb3) bounds["lb3"] = *result.lb3;
  bounds["lb"] = result.lb;
  doc["bounds"] = std::move(bounds);
  doc["nodes_explored"] = result.nodes_explored;
  doc["iterations"] = result.iterations;
  doc["schedule"] = schedule_json(result.schedule);
  return doc.dump(1) + "\n";
}

std::string trace_to_json_lines(const std::vector<TraceEvent>& trace) {
  std::ostringstream out;
  for (const auto& event : trace) {
    json line = {{"start", event.start_index},
                 {"phase", event.phase},
                 {"move", event.move},
                 {"outcome", event.outcome},
                 {"value", event.value}};
    out << line.dump() << "\n";
  }
  return out.str();
}

std::string ir_history_csv(const IrResult& result) {
  std::ostringstream out;
  out << "h,lower,upper,elapsed_s\n";
  char buffer[64];
  for (const auto& row : result.history) {
    std::snprintf(buffer, sizeof(buffer), "%.3f", row.elapsed_seconds);
    out << row.iteration << "," << row.lower << "," << row.upper << "," << buffer << "\n";
  }
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace rupmss
