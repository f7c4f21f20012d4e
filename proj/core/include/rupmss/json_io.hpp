#pragma once

#include <string>

#include "rupmss/ere.hpp"
#include "rupmss/ir.hpp"
#include "rupmss/mdh.hpp"
#include "rupmss/model.hpp"
#include "rupmss/sa.hpp"

namespace rupmss {

// Formats carry a one-line version tag; parsers report the offending field.
// Conventional extensions: .inst.json, .sched.json, .scen.json.

std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

std::string schedule_to_json(const Schedule& sched);
Schedule schedule_from_json(const std::string& text);

std::string scenario_to_json(const Scenario& scen);
Scenario scenario_from_json(const std::string& text);

/// Canonical report serializations. Deliberately wall-clock free so repeated
/// runs with one seed produce byte-identical files.
std::string report_to_json(const RegretReport& report);
std::string mdh_result_to_json(const MdhResult& result, const MdhConfig& cfg);
std::string ir_result_to_json(const IrResult& result);
std::string sa_result_to_json(const SaResult& result, const SaConfig& cfg);
std::string detsolve_result_to_json(const DetSolveResult& result);
std::string trace_to_json_lines(const std::vector<TraceEvent>& trace);

/// Per-iteration bounds with wall-clock timing: "h,lower,upper,elapsed_s".
std::string ir_history_csv(const IrResult& result);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace rupmss
