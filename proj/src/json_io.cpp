#include "mass/json_io.hpp"

#include <cmath>
#include <cstdint>

namespace mass {

using nlohmann::json;

json number_json(double v) {
  if (std::floor(v) == v && std::abs(v) <= 9.0e15) return json(static_cast<std::int64_t>(v));
  return json(v);
}

json floor_plan_to_json(const FloorPlan& plan) {
  return json{{"width_m", number_json(plan.width_m)},   {"height_m", number_json(plan.height_m)},
              {"aisle_m", number_json(plan.aisle_m)},   {"rows", plan.rows},
              {"cols", plan.cols},                      {"cell_w_m", number_json(plan.cell_w_m)},
              {"cell_h_m", number_json(plan.cell_h_m)}};
}

FloorPlan floor_plan_from_json(const json& j, int n) {
  if (!j.is_object()) throw ParseError("floor config must be a JSON object");
  for (const char* key : {"width_m", "height_m", "aisle_m"}) {
    if (!j.contains(key)) throw ParseError(std::string("floor config is missing \"") + key + "\"");
    if (!j.at(key).is_number())
      throw ParseError(std::string("floor config field \"") + key + "\" must be a number");
  }
  const double w = j.at("width_m").get<double>();
  const double h = j.at("height_m").get<double>();
  const double aisle = j.at("aisle_m").get<double>();
  const bool has_rows = j.contains("rows"), has_cols = j.contains("cols");
  if (has_rows != has_cols)
    throw ParseError("floor config must override \"rows\" and \"cols\" together");
  if (has_rows) {
    if (!j.at("rows").is_number_integer() || !j.at("cols").is_number_integer())
      throw ParseError("floor config \"rows\" and \"cols\" must be integers");
    return build_floor_plan(w, h, aisle, j.at("rows").get<int>(), j.at("cols").get<int>());
  }
  return build_floor_plan(w, h, aisle, n);
}

json layout_to_json(const BlockLayout& layout, const std::vector<std::string>& names) {
  json placement = json::array();
  for (int f = 0; f < layout.facility_count(); ++f) {
    const Slot s = layout.slot_of(f);
    placement.push_back(json{{"facility", names.at(f)}, {"row", s.row}, {"col", s.col}});
  }
  return json{{"plan", floor_plan_to_json(layout.plan())}, {"placement", std::move(placement)}};
}

json assignment_to_json(const Assignment& a) {
  return json{{"n", a.n},
              {"sigma", a.sigma},
              {"objective", a.objective},
              {"certificate_k", a.certificate_k}};
}

json trace_to_json(const SwapTrace& trace, const std::vector<std::string>& names) {
  json out = json::array();
  for (const SwapStep& step : trace) {
    json facs = json::array();
    for (int f : step.facilities) facs.push_back(names.at(f));
    out.push_back(json{{"facilities", std::move(facs)},
                       {"cost_before", number_json(step.cost_before)},
                       {"cost_after", number_json(step.cost_after)}});
  }
  return out;
}

json pipeline_result_to_json(const PipelineResult& r, const std::vector<std::string>& names) {
  return json{{"assignment", assignment_to_json(r.assignment)},
              {"initial_layout", layout_to_json(r.initial_layout, names)},
              {"initial_cost", number_json(r.initial_cost)},
              {"final_layout", layout_to_json(r.final_layout, names)},
              {"final_cost", number_json(r.final_cost)},
              {"improvement", number_json(r.improvement)},
              {"trace", trace_to_json(r.trace, names)}};
}

json benchmark_report_to_json(const BenchmarkReport& r) {
  json trials = json::array();
  for (const BenchmarkTrial& t : r.random_trials)
    trials.push_back(json{{"seed", t.seed},
                          {"iterations", t.iterations},
                          {"final_cost", number_json(t.final_cost)}});
  json out{{"mass_iterations", r.mass_iterations}, {"random_trials", std::move(trials)}};
  out["global_optimum"] = r.global_optimum ? number_json(*r.global_optimum) : json(nullptr);
  return out;
}

FloorPlan parse_floor_config(const std::string& text, int n) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid floor config JSON: ") + e.what());
  }
  return floor_plan_from_json(j, n);
}

}  // namespace mass
