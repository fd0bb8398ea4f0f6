#include "stackgame/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "stackgame/allocation.hpp"
#include "stackgame/attacker_analysis.hpp"
#include "stackgame/best_response.hpp"
#include "stackgame/feasibility.hpp"
#include "stackgame/instance_io.hpp"
#include "stackgame/payoff_region.hpp"
#include "stackgame/selftest.hpp"
#include "stackgame/stackelberg_solver.hpp"

namespace stackgame {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json rational_list(const std::vector<Rational>& values) {
  json list = json::array();
  for (const Rational& v : values) list.push_back(v.str());
  return list;
}

json rational_field(const Rational& value) {
  return json{{"exact", value.str()}, {"decimal", value.to_double()}};
}

json instance_echo(const GameInstance& instance) {
  return json::parse(instance_to_json(instance));
}

json feasibility_to_json(const GameInstance& instance, const FeasibilityReport& report) {
  json doc;
  json per_asset = json::array();
  for (const AssetIntervalCheck& check : report.per_asset_checks) {
    per_asset.push_back(json{{"index", check.index + 1},
                             {"name", instance.asset(check.index).name},
                             {"omega_attacker_sign", check.omega_sign},
                             {"interval_ok", check.passed}});
  }
  doc["per_asset"] = std::move(per_asset);
  doc["sum_condition_one"] = rational_field(report.sum_condition_one);
  doc["sum_condition_one_deviation"] = (report.sum_condition_one - 1).str();
  doc["sum_condition_two"] = rational_field(report.sum_condition_two);
  doc["sum_condition_two_deviation"] = report.sum_condition_two.str();
  doc["intervals_ok"] = report.intervals_ok;
  doc["sums_ok"] = report.sums_ok;
  doc["feasible"] = report.feasible;
  return doc;
}

json solve_to_json(const GameInstance& instance, const AttackVector& attack) {
  SolveReport report = solve(instance, attack);
  json doc;
  doc["attack"] = rational_list(attack.entries());
  doc["deltas"] = json{{"delta1", rational_field(report.deltas.delta1)},
                       {"delta2", rational_field(report.deltas.delta2)},
                       {"delta3", rational_field(report.deltas.delta3)}};
  doc["regime"] = to_string(report.regime);
  doc["defense"] = json{
      {"family_indeterminate", report.defense.family_indeterminate},
      {"anchor_interval",
       json{{"lo", report.defense.anchor_interval.first.str()},
            {"hi", report.defense.anchor_interval.second.str()}}},
      {"anchor_prob", report.defense.anchor_prob.str()},
      {"vector", rational_list(report.defense.vector.entries())}};
  doc["defender_payoff"] = rational_field(report.defender_payoff);
  doc["attacker_payoff"] = rational_field(report.attacker_payoff);
  return doc;
}

json attacker_bounds_to_json(const GameInstance& instance) {
  HyperplaneProblem problem = build_hyperplane_problem(instance);
  json doc;
  doc["hyperplane"] = json{{"alpha", rational_list(problem.alpha)},
                           {"rhs", problem.rhs.str()},
                           {"objective", rational_list(problem.objective)}};

  RatioTable table = payoff_ratios(problem);
  json ratios = json::array();
  for (std::size_t i = 0; i < table.ratios.size(); ++i) {
    json entry;
    entry["index"] = i + 1;
    entry["name"] = instance.asset(i).name;
    if (table.ratios[i]) {
      entry["ratio"] = rational_field(*table.ratios[i]);
    } else {
      entry["ratio"] = nullptr;
    }
    entry["single_index_feasible"] =
        std::find(table.feasible_indices.begin(), table.feasible_indices.end(), i) !=
        table.feasible_indices.end();
    ratios.push_back(std::move(entry));
  }
  doc["ratios"] = std::move(ratios);

  ConstrainedExtrema extrema = constrained_extrema(problem);
  doc["minimum"] = json{{"value", rational_field(extrema.min_value)},
                        {"attack", rational_list(extrema.min_attack.entries())}};
  doc["maximum"] = json{{"value", rational_field(extrema.max_value)},
                        {"attack", rational_list(extrema.max_attack.entries())}};
  return doc;
}

json region_point(const PlanarPoint& point) {
  json doc;
  doc["label"] = point.label();
  doc["pi_b1"] = point.x.str();
  doc["pi_b2"] = point.y.str();
  return doc;
}

json region_to_json(const PayoffRegion& region) {
  json doc;
  json vertices = json::array();
  for (const PlanarPoint& p : region.vertices) vertices.push_back(region_point(p));
  doc["vertices"] = std::move(vertices);
  json hull = json::array();
  for (const PlanarPoint& p : region.hull) hull.push_back(region_point(p));
  doc["hull"] = std::move(hull);
  json pareto = json::array();
  for (const PlanarPoint& p : region.pareto) pareto.push_back(region_point(p));
  doc["pareto"] = std::move(pareto);
  return doc;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ParseError("cannot write '" + path + "'");
  }
  out << content;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

struct CliOptions {
  std::string instance_path;
  std::string anchor_selector;
  std::string attack_spec;
  std::string attack_file;
  std::string plot_path;
  std::string table_path;
  std::string allocate_prob;
  std::size_t resources = 0;
};

InstanceDocument load_instance(const CliOptions& options) {
  if (options.instance_path.empty()) {
    throw ParseError("no instance file given (use --instance)");
  }
  InstanceDocument doc = parse_instance_document(read_file(options.instance_path));
  if (!options.anchor_selector.empty()) {
    doc = rotate_anchor(std::move(doc), options.anchor_selector);
  }
  return doc;
}

int run_validate(const CliOptions& options, std::ostream& out) {
  InstanceDocument doc = load_instance(options);
  FeasibilityReport report = check_feasibility(doc.instance);
  json body;
  body["command"] = "validate";
  body["instance"] = instance_echo(doc.instance);
  body["feasibility"] = feasibility_to_json(doc.instance, report);
  emit(out, body);
  return report.feasible ? kExitOk : kExitInfeasible;
}

int run_solve(const CliOptions& options, std::ostream& out) {
  InstanceDocument doc = load_instance(options);
  json body;
  body["command"] = "solve";

  if (!options.attack_file.empty()) {
    std::istringstream lines(read_file(options.attack_file));
    json reports = json::array();
    std::string line;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      AttackVector attack = parse_attack_spec(line, doc.instance.size());
      reports.push_back(solve_to_json(doc.instance, attack));
    }
    if (reports.empty()) {
      throw ParseError("attack file '" + options.attack_file + "' contains no attack vectors");
    }
    body["reports"] = std::move(reports);
    emit(out, body);
    return kExitOk;
  }

  std::optional<AttackVector> attack;
  if (!options.attack_spec.empty()) {
    attack = parse_attack_spec(options.attack_spec, doc.instance.size());
  } else if (doc.attack) {
    attack = doc.attack;
  }
  if (!attack) {
    throw ParseError("no attack vector: pass --attack/--attack-file or add an "
                     "\"attack\" field to the instance document");
  }
  body["report"] = solve_to_json(doc.instance, *attack);
  emit(out, body);
  return kExitOk;
}

int run_attacker_bounds(const CliOptions& options, std::ostream& out) {
  InstanceDocument doc = load_instance(options);
  json body;
  body["command"] = "attacker-bounds";
  body["analysis"] = attacker_bounds_to_json(doc.instance);
  emit(out, body);
  return kExitOk;
}

int run_region(const CliOptions& options, std::ostream& out) {
  InstanceDocument doc = load_instance(options);
  PayoffRegion region = build_payoff_region(doc.instance);
  json body;
  body["command"] = "region";
  body["region"] = region_to_json(region);
  if (!options.plot_path.empty()) {
    std::ostringstream svg;
    render_region_svg(region, svg);
    write_text_file(options.plot_path, svg.str());
    body["plot_written"] = options.plot_path;
  }
  if (!options.table_path.empty()) {
    std::ostringstream table;
    write_region_table(region, table);
    write_text_file(options.table_path, table.str());
    body["table_written"] = options.table_path;
  }
  emit(out, body);
  return kExitOk;
}

int run_allocate(const CliOptions& options, std::ostream& out) {
  InstanceDocument doc = load_instance(options);
  Rational anchor_prob = Rational::parse(options.allocate_prob);
  DefenseVector defense = defense_family_at(doc.instance, anchor_prob);
  AllocationMatrix matrix = uniform_allocation(defense, options.resources);
  write_allocation(matrix, out);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analytical solver for the Stackelberg attacker-defender "
               "resource-allocation game"};
  app.name("stackgame");
  CliOptions options;

  app.add_option("-i,--instance", options.instance_path, "instance JSON file");
  app.add_option("--anchor", options.anchor_selector,
                 "asset name or 1-based index to rotate into the anchor position");
  app.require_subcommand(1);

  CLI::App* validate = app.add_subcommand("validate", "check the anchor feasibility conditions");
  CLI::App* solve_cmd = app.add_subcommand("solve", "equilibrium report for an observed attack");
  solve_cmd->add_option("--attack", options.attack_spec,
                        "attack vector: e<k>, uniform, or comma-separated rationals");
  solve_cmd->add_option("--attack-file", options.attack_file,
                        "file with one attack vector per line (batch mode)");
  CLI::App* bounds =
      app.add_subcommand("attacker-bounds", "attacker payoff analysis on the delta2 = 0 slice");
  CLI::App* region = app.add_subcommand("region", "feasible payoff region and maximal points");
  region->add_option("--plot", options.plot_path, "write an SVG plot to this path");
  region->add_option("--table", options.table_path, "write a CSV coordinate table to this path");
  CLI::App* allocate =
      app.add_subcommand("allocate", "realize a family defense as a resource assignment matrix");
  allocate->add_option("--resources", options.resources, "number of resources (M >= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  allocate->add_option("--anchor-prob", options.allocate_prob,
                       "anchor protection probability d (rational)")
      ->required();
  CLI::App* selftest =
      app.add_subcommand("selftest", "golden checks against the bundled example instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return run_validate(options, out);
    if (solve_cmd->parsed()) return run_solve(options, out);
    if (bounds->parsed()) return run_attacker_bounds(options, out);
    if (region->parsed()) return run_region(options, out);
    if (allocate->parsed()) return run_allocate(options, out);
    if (selftest->parsed()) return run_selftest(out) == 0 ? kExitOk : kExitInternal;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const DegenerateError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const GridCapError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace stackgame
