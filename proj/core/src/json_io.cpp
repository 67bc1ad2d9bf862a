#include "ralloc/json_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ralloc {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

std::string instance_to_json(const Instance& instance) {
  ordered_json j;
  j["n"] = instance.player_count();
  j["B"] = instance.total_budget();
  j["M"] = instance.value_cap();
  j["b"] = instance.item_budgets();
  ordered_json costs = ordered_json::array();
  for (int i = 0; i < instance.player_count(); ++i) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k <= instance.item_budget(i); ++k) {
      row.push_back(instance.peek(i, k));
    }
    costs.push_back(std::move(row));
  }
  j["costs"] = std::move(costs);
  j["convex"] = instance.convex_flagged();
  return j.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
  const ordered_json j = parse(text);
  try {
    const auto budgets = j.at("b").get<std::vector<int>>();
    if (j.contains("n") &&
        j.at("n").get<int>() != static_cast<int>(budgets.size())) {
      throw AssumptionViolation(AssumptionClause::shape_mismatch,
                                "n does not match the length of b");
    }
    return create_instance(budgets, j.at("B").get<int>(),
                           j.at("M").get<double>(),
                           j.at("costs").get<std::vector<std::vector<double>>>(),
                           j.value("convex", false));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed instance document: ") + e.what());
  }
}

Instance load_instance_file(const std::filesystem::path& path) {
  return instance_from_json(read_file(path));
}

void save_instance_file(const Instance& instance,
                        const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << instance_to_json(instance);
}

std::string report_to_json(const SolveReport& report) {
  ordered_json j;
  j["method"] = report.method;
  if (!report.variant.empty()) j["variant"] = report.variant;
  j["allocation"] = report.allocation.items;
  j["objective_lower"] = report.objective_lower;
  j["objective_upper"] = report.objective_upper;
  if (report.true_objective) j["true_objective"] = *report.true_objective;
  j["evals"] = report.evals;
  j["iterations"] = report.iterations;
  j["terminated_early"] = report.terminated_early;
  j["heuristic_bounds"] = report.heuristic_bounds;
  ordered_json trace = ordered_json::array();
  for (const TraceEntry& entry : report.trace) {
    ordered_json t;
    t["iteration"] = entry.iteration;
    t["allocation"] = entry.allocation.items;
    t["lower"] = entry.lower;
    t["upper"] = entry.upper;
    t["evals"] = entry.evals;
    if (entry.upper_model_optimum) {
      t["upper_model_optimum"] = *entry.upper_model_optimum;
    }
    if (entry.bounds) {
      t["bounds"] = {{"lower", entry.bounds->lower},
                     {"upper", entry.bounds->upper}};
    }
    trace.push_back(std::move(t));
  }
  j["trace"] = std::move(trace);
  return j.dump(2) + "\n";
}

GenSpec gen_spec_from_json(const std::string& text) {
  const ordered_json j = parse(text);
  GenSpec spec;
  try {
    spec.family = family_from_string(j.at("family").get<std::string>());
    spec.players = j.at("n").get<int>();
    if (j.at("b").is_array()) {
      spec.item_budgets = j.at("b").get<std::vector<int>>();
    } else {
      spec.item_budgets = {j.at("b").get<int>()};
    }
    spec.total_budget = j.at("B").get<int>();
    spec.value_cap = j.value("M", 100.0);
    spec.seed = j.value("seed", std::uint64_t{0});
    spec.perturbation = j.value("perturbation", 0.1);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed generator spec: ") + e.what());
  }
  return spec;
}

}  // namespace ralloc
