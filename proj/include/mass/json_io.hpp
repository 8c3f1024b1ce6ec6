// JSON serialization for the published result types. Field names are stable.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mass/layout.hpp"
#include "mass/pipeline.hpp"

namespace mass {

/// Costs and distances are integral in load-unit arithmetic whenever the
/// inputs are; emit them as JSON integers in that case.
nlohmann::json number_json(double v);

nlohmann::json floor_plan_to_json(const FloorPlan& plan);
FloorPlan floor_plan_from_json(const nlohmann::json& j, int n);

nlohmann::json layout_to_json(const BlockLayout& layout, const std::vector<std::string>& names);
nlohmann::json assignment_to_json(const Assignment& a);
nlohmann::json trace_to_json(const SwapTrace& trace, const std::vector<std::string>& names);
nlohmann::json pipeline_result_to_json(const PipelineResult& r, const std::vector<std::string>& names);
nlohmann::json benchmark_report_to_json(const BenchmarkReport& r);

/// Parses the floor config object {"width_m", "height_m", "aisle_m"} with an
/// optional {"rows", "cols"} override and derives the plan for n facilities.
/// Throws ParseError on malformed input.
FloorPlan parse_floor_config(const std::string& text, int n);

}  // namespace mass
