// Python bindings: thin wrappers over the C++ pipeline, returning plain
// dict/list structures that mirror the CLI's JSON schema.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mass/craft.hpp"
#include "mass/json_io.hpp"
#include "mass/matrix.hpp"
#include "mass/pipeline.hpp"

namespace py = pybind11;
using namespace mass;

namespace {

py::object to_py(const nlohmann::json& j) {
  using value_t = nlohmann::json::value_t;
  switch (j.type()) {
    case value_t::object: {
      py::dict d;
      for (const auto& [key, value] : j.items()) d[py::str(key)] = to_py(value);
      return d;
    }
    case value_t::array: {
      py::list l;
      for (const auto& value : j) l.append(to_py(value));
      return l;
    }
    case value_t::string:
      return py::str(j.get<std::string>());
    case value_t::boolean:
      return py::bool_(j.get<bool>());
    case value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case value_t::number_float:
      return py::float_(j.get<double>());
    default:
      return py::none();
  }
}

DistanceModel model_from(const std::string& s) {
  if (s == "paper") return DistanceModel::Paper;
  if (s == "rectilinear") return DistanceModel::RectilinearCentroid;
  throw ValidationError("unknown distance model: " + s);
}

MatchingObjective objective_from(const std::string& s) {
  if (s == "minimize") return MatchingObjective::Minimize;
  if (s == "max-composite") return MatchingObjective::MaximizeComposite;
  throw ValidationError("unknown matching objective: " + s);
}

CraftConfig config_from(const std::string& model, bool three_way) {
  CraftConfig cfg;
  cfg.model = model_from(model);
  cfg.enable_three_way = three_way;
  return cfg;
}

UnitOrder order_from(bool reproduce_paper) {
  return reproduce_paper ? UnitOrder::IndexAscending : UnitOrder::CompositeDescending;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "MASS plant layout: Hungarian assignment seeding + CRAFT improvement";

  py::register_exception<ValidationError>(mod, "ValidationError", PyExc_ValueError);
  static py::exception<InfeasibleError> infeasible(mod, "InfeasibleError");
  static py::exception<TooLargeError> too_large(mod, "TooLargeError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InfeasibleError& e) {
      py::set_error(infeasible, e.what());
    } catch (const TooLargeError& e) {
      py::set_error(too_large, e.what());
    }
  });

  py::class_<LoadMatrix>(mod, "LoadMatrix")
      .def_property_readonly("n", &LoadMatrix::size)
      .def_property_readonly("names", &LoadMatrix::names)
      .def("flow", &LoadMatrix::flow_or_zero, py::arg("from_"), py::arg("to"),
           "Directed flow, vacant read as 0")
      .def("composite", &LoadMatrix::composite, py::arg("a"), py::arg("b"))
      .def("__repr__", [](const LoadMatrix& m) {
        return "<LoadMatrix n=" + std::to_string(m.size()) + ">";
      });

  py::class_<FloorPlan>(mod, "FloorPlan")
      .def_readonly("width_m", &FloorPlan::width_m)
      .def_readonly("height_m", &FloorPlan::height_m)
      .def_readonly("aisle_m", &FloorPlan::aisle_m)
      .def_readonly("rows", &FloorPlan::rows)
      .def_readonly("cols", &FloorPlan::cols)
      .def_readonly("cell_w_m", &FloorPlan::cell_w_m)
      .def_readonly("cell_h_m", &FloorPlan::cell_h_m)
      .def("__repr__", [](const FloorPlan& p) {
        return "<FloorPlan " + std::to_string(p.rows) + "x" + std::to_string(p.cols) + ">";
      });

  mod.def("parse_load_matrix", &parse_load_matrix, py::arg("text"),
          "Parse the load-matrix CSV format");
  mod.def("serialize_load_matrix", &serialize_load_matrix, py::arg("matrix"));
  mod.def(
      "composite_movements",
      [](const LoadMatrix& m) {
        py::list out;
        for (const CompositeEntry& e : composite_movements(m))
          out.append(py::make_tuple(e.a, e.b, e.composite));
        return out;
      },
      py::arg("matrix"), "Pairs ranked by descending composite movement, as (a, b, value)");
  mod.def(
      "build_floor_plan",
      [](double w, double h, double aisle, int n) { return build_floor_plan(w, h, aisle, n); },
      py::arg("width_m"), py::arg("height_m"), py::arg("aisle_m"), py::arg("n"));
  mod.def(
      "build_floor_plan_grid",
      [](double w, double h, double aisle, int rows, int cols) {
        return build_floor_plan(w, h, aisle, rows, cols);
      },
      py::arg("width_m"), py::arg("height_m"), py::arg("aisle_m"), py::arg("rows"),
      py::arg("cols"));
  mod.def(
      "solve_assignment",
      [](const LoadMatrix& m) { return to_py(assignment_to_json(solve_assignment(to_cost_matrix(m)))); },
      py::arg("matrix"), "Minimum-cost assignment over the load matrix's non-vacant cells");
  mod.def(
      "run_mass",
      [](const LoadMatrix& m, const FloorPlan& plan, const std::string& model,
         const std::string& objective, bool three_way, bool reproduce_paper) {
        const PipelineResult r = run_mass(m, plan, config_from(model, three_way),
                                          objective_from(objective), order_from(reproduce_paper));
        return to_py(pipeline_result_to_json(r, m.names()));
      },
      py::arg("matrix"), py::arg("plan"), py::arg("model") = "rectilinear",
      py::arg("objective") = "minimize", py::arg("three_way") = false,
      py::arg("reproduce_paper") = false, "Full pipeline; returns the result as nested dicts");
  mod.def(
      "brute_force_optimum",
      [](const LoadMatrix& m, const FloorPlan& plan, const std::string& model) {
        const OracleResult r = brute_force_optimum(m, plan, model_from(model));
        nlohmann::json j{{"global_optimum", number_json(r.optimum)},
                         {"layout", layout_to_json(r.layout, m.names())}};
        return to_py(j);
      },
      py::arg("matrix"), py::arg("plan"), py::arg("model") = "rectilinear");
  mod.def(
      "benchmark_seeds",
      [](const LoadMatrix& m, const FloorPlan& plan, int trials, std::uint64_t seed,
         const std::string& model, bool three_way, bool reproduce_paper) {
        const BenchmarkReport r = benchmark_seeds(m, plan, config_from(model, three_way), trials,
                                                  seed, order_from(reproduce_paper));
        return to_py(benchmark_report_to_json(r));
      },
      py::arg("matrix"), py::arg("plan"), py::arg("trials") = 100, py::arg("seed") = 0,
      py::arg("model") = "rectilinear", py::arg("three_way") = false,
      py::arg("reproduce_paper") = false);
}
