// mass: command-line front end for the layout library.
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mass/craft.hpp"
#include "mass/json_io.hpp"
#include "mass/matrix.hpp"
#include "mass/pipeline.hpp"

namespace {

using namespace mass;

struct RunOptions {
  std::string loads_path;
  std::string floor_path;
  std::string model = "rectilinear";
  std::string objective = "minimize";
  bool three_way = false;
  std::string format = "text";
  int trials = 100;
  std::uint64_t seed = 0;
  bool reproduce_paper = false;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

DistanceModel model_of(const RunOptions& o) {
  return o.model == "paper" ? DistanceModel::Paper : DistanceModel::RectilinearCentroid;
}

MatchingObjective objective_of(const RunOptions& o) {
  return o.objective == "max-composite" ? MatchingObjective::MaximizeComposite
                                        : MatchingObjective::Minimize;
}

UnitOrder order_of(const RunOptions& o) {
  return o.reproduce_paper ? UnitOrder::IndexAscending : UnitOrder::CompositeDescending;
}

CraftConfig craft_config(const RunOptions& o) {
  CraftConfig cfg;
  cfg.enable_three_way = o.three_way;
  cfg.model = model_of(o);
  return cfg;
}

// Plain-number rendering: integral values print without a decimal point.
std::string fmt(double v) { return number_json(v).dump(); }

// Fixed-width boxes per slot, one-character gutters for the aisles.
std::string render_grid(const BlockLayout& layout, const std::vector<std::string>& names) {
  std::size_t w = 1;
  for (const std::string& s : names) w = std::max(w, s.size());
  const std::string border = "+" + std::string(w + 2, '-') + "+";

  std::vector<std::vector<std::string>> label(layout.plan().rows,
                                              std::vector<std::string>(layout.plan().cols));
  for (int f = 0; f < layout.facility_count(); ++f) {
    const Slot s = layout.slot_of(f);
    label[s.row][s.col] = names.at(f);
  }

  std::ostringstream os;
  for (int r = 0; r < layout.plan().rows; ++r) {
    if (r) os << '\n';  // vertical aisle gutter
    std::ostringstream top, mid;
    for (int c = 0; c < layout.plan().cols; ++c) {
      if (c) {
        top << ' ';
        mid << ' ';
      }
      const std::string& name = label[r][c];
      const std::size_t pad = w - name.size();
      top << border;
      mid << "| " << std::string(pad / 2, ' ') << name << std::string(pad - pad / 2, ' ') << " |";
    }
    os << top.str() << '\n' << mid.str() << '\n' << top.str() << '\n';
  }
  return os.str();
}

std::string pairs_line(const Assignment& a, const std::vector<std::string>& names) {
  std::ostringstream os;
  for (int i = 0; i < a.n; ++i) {
    if (i) os << ", ";
    os << names.at(i) << "->" << names.at(a.sigma[i]);
  }
  return os.str();
}

// The star table: facilities on both axes, '*' at assigned cells.
std::string star_table(const Assignment& a, const std::vector<std::string>& names) {
  std::size_t w = 1;
  for (const std::string& s : names) w = std::max(w, s.size());
  auto pad = [&](const std::string& s) { return s + std::string(w - s.size(), ' '); };

  std::ostringstream os;
  os << std::string(w, ' ');
  for (int j = 0; j < a.n; ++j) os << "  " << pad(names[j]);
  os << '\n';
  for (int i = 0; i < a.n; ++i) {
    os << pad(names[i]);
    for (int j = 0; j < a.n; ++j) os << "  " << pad(a.sigma[i] == j ? "*" : ".");
    os << '\n';
  }
  return os.str();
}

void print_trace(std::ostream& os, const SwapTrace& trace, const std::vector<std::string>& names) {
  os << "improving steps:\n";
  if (trace.empty()) {
    os << "  (none)\n";
    return;
  }
  for (std::size_t k = 0; k < trace.size(); ++k) {
    os << "  " << k + 1 << ". [";
    for (std::size_t i = 0; i < trace[k].facilities.size(); ++i) {
      if (i) os << ", ";
      os << names.at(trace[k].facilities[i]);
    }
    os << "]  " << fmt(trace[k].cost_before) << " -> " << fmt(trace[k].cost_after) << '\n';
  }
}

int cmd_solve(const RunOptions& o) {
  const LoadMatrix m = parse_load_matrix(slurp(o.loads_path));
  const FloorPlan plan = parse_floor_config(slurp(o.floor_path), m.size());
  const PipelineResult r = run_mass(m, plan, craft_config(o), objective_of(o), order_of(o));

  if (o.format == "json") {
    std::cout << pipeline_result_to_json(r, m.names()).dump(2) << '\n';
    return 0;
  }
  std::cout << "assignment: " << pairs_line(r.assignment, m.names()) << "  (objective "
            << r.assignment.objective << ", k = " << r.assignment.certificate_k << ")\n\n";
  std::cout << "initial cost: " << fmt(r.initial_cost) << '\n';
  std::cout << render_grid(r.initial_layout, m.names()) << '\n';
  print_trace(std::cout, r.trace, m.names());
  std::cout << "\nfinal cost: " << fmt(r.final_cost) << '\n';
  std::cout << render_grid(r.final_layout, m.names()) << '\n';
  std::cout << "improvement: " << fmt(r.improvement) << '\n';
  return 0;
}

CostMatrix stage_cost_matrix(const LoadMatrix& m, MatchingObjective objective) {
  CostMatrix c = to_cost_matrix(m);
  if (objective == MatchingObjective::MaximizeComposite)
    for (int i = 0; i < c.n; ++i)
      for (int j = 0; j < c.n; ++j) c.at(i, j) = i == j ? Cell{} : Cell{-m.composite(i, j)};
  return c;
}

int cmd_assign(const RunOptions& o) {
  const LoadMatrix m = parse_load_matrix(slurp(o.loads_path));
  const Assignment a = solve_assignment(stage_cost_matrix(m, objective_of(o)));

  if (o.format == "json") {
    std::cout << assignment_to_json(a).dump(2) << '\n';
    return 0;
  }
  std::cout << star_table(a, m.names());
  std::cout << "pairs: " << pairs_line(a, m.names()) << '\n';
  std::cout << "objective: " << a.objective << '\n';
  std::cout << "certificate k: " << a.certificate_k << '\n';
  return 0;
}

int cmd_benchmark(const RunOptions& o) {
  const LoadMatrix m = parse_load_matrix(slurp(o.loads_path));
  const FloorPlan plan = parse_floor_config(slurp(o.floor_path), m.size());
  const BenchmarkReport r =
      benchmark_seeds(m, plan, craft_config(o), o.trials, o.seed, order_of(o));

  if (o.format == "json") {
    std::cout << benchmark_report_to_json(r).dump(2) << '\n';
    return 0;
  }
  std::cout << "seed iterations (assignment start): " << r.mass_iterations << '\n';
  std::cout << std::setw(6) << "trial" << std::setw(14) << "seed" << std::setw(12) << "iterations"
            << std::setw(12) << "final cost" << '\n';
  double total = 0;
  for (std::size_t t = 0; t < r.random_trials.size(); ++t) {
    const BenchmarkTrial& trial = r.random_trials[t];
    std::cout << std::setw(6) << t << std::setw(14) << trial.seed << std::setw(12)
              << trial.iterations << std::setw(12) << fmt(trial.final_cost) << '\n';
    total += trial.iterations;
  }
  std::cout << "mean random iterations: " << total / r.random_trials.size() << '\n';
  if (r.global_optimum) std::cout << "global optimum: " << fmt(*r.global_optimum) << '\n';
  return 0;
}

int cmd_oracle(const RunOptions& o) {
  const LoadMatrix m = parse_load_matrix(slurp(o.loads_path));
  const FloorPlan plan = parse_floor_config(slurp(o.floor_path), m.size());
  const OracleResult r = brute_force_optimum(m, plan, model_of(o));

  if (o.format == "json") {
    nlohmann::json j{{"global_optimum", number_json(r.optimum)},
                     {"layout", layout_to_json(r.layout, m.names())}};
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "global optimum: " << fmt(r.optimum) << '\n';
  std::cout << render_grid(r.layout, m.names());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MASS plant-layout solver: assignment-seeded CRAFT improvement"};
  app.require_subcommand(1);

  RunOptions o;
  auto add_common = [&](CLI::App* cmd, bool wants_floor) {
    cmd->add_option("--loads", o.loads_path, "load matrix CSV")->required();
    if (wants_floor) cmd->add_option("--floor", o.floor_path, "floor config JSON")->required();
    cmd->add_option("--model", o.model, "distance model")
        ->check(CLI::IsMember({"paper", "rectilinear"}));
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* solve = app.add_subcommand("solve", "run the full MASS pipeline");
  add_common(solve, true);
  solve->add_option("--objective", o.objective, "matching objective")
      ->check(CLI::IsMember({"minimize", "max-composite"}));
  solve->add_flag("--three-way", o.three_way, "enable 3-cycle moves");
  solve->add_flag("--reproduce-paper", o.reproduce_paper,
                  "order initial columns by lowest facility index");

  CLI::App* assign = app.add_subcommand("assign", "run the assignment stage only");
  assign->add_option("--loads", o.loads_path, "load matrix CSV")->required();
  assign->add_option("--objective", o.objective, "matching objective")
      ->check(CLI::IsMember({"minimize", "max-composite"}));
  assign->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* benchmark = app.add_subcommand("benchmark", "compare the MASS seed to random starts");
  add_common(benchmark, true);
  benchmark->add_option("--objective", o.objective, "matching objective")
      ->check(CLI::IsMember({"minimize", "max-composite"}));
  benchmark->add_flag("--three-way", o.three_way, "enable 3-cycle moves");
  benchmark->add_flag("--reproduce-paper", o.reproduce_paper,
                      "order initial columns by lowest facility index");
  benchmark->add_option("--trials", o.trials, "random starts")->check(CLI::PositiveNumber);
  benchmark->add_option("--seed", o.seed, "RNG seed (default 0, never wall clock)");

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive global optimum (n <= 8)");
  add_common(oracle, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (solve->parsed()) return cmd_solve(o);
    if (assign->parsed()) return cmd_assign(o);
    if (benchmark->parsed()) return cmd_benchmark(o);
    return cmd_oracle(o);
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return 2;
  } catch (const TooLargeError& e) {
    std::cerr << "too large: " << e.what() << '\n';
    return 3;
  } catch (const mass::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
