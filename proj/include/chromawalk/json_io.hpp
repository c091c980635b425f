#pragma once

#include <string>

#include "json.hpp"

#include "chromawalk/algorithms.hpp"
#include "chromawalk/engine.hpp"
#include "chromawalk/graphlib.hpp"
#include "chromawalk/verifier.hpp"

namespace chromawalk {

nlohmann::json graph_to_json(const Graph& graph);
Graph graph_from_json(const nlohmann::json& j);

// {graph, start, steps:[{t,node,before,after,rule,directive,chosen,
//  terminated_by}], final:{agent,coloring,terminated}}; colors by name.
nlohmann::json trace_to_json(const Trace& trace, const ColorSet& colors);
Trace trace_from_json(const nlohmann::json& j, const ColorSet& colors);

nlohmann::json class_report_to_json(const GraphClassReport& report);

nlohmann::json verdict_to_json(const Verdict& verdict, const ColorSet& colors);
nlohmann::json violation_to_json(const MonitorViolation& violation, const ColorSet& colors);
nlohmann::json sweep_report_to_json(const SweepReport& report, const ColorSet& colors);

nlohmann::json semi_dfs_result_to_json(const SemiDfsResult& result);

// One graph frame per configuration, node labels carrying the color names.
std::string trace_to_dot(const Trace& trace, const ColorSet& colors);
std::string trace_to_text(const Trace& trace, const ColorSet& colors);

}  // namespace chromawalk
