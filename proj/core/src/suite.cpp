#include "ralloc/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ralloc/format.hpp"
#include "ralloc/greedy.hpp"
#include "ralloc/json_io.hpp"
#include "ralloc/ledger.hpp"
#include "ralloc/one_opt.hpp"
#include "ralloc/sandwich.hpp"
#include "ralloc/subsolver.hpp"

namespace ralloc {

const std::vector<std::string>& registered_methods() {
  static const std::vector<std::string> methods = {
      "myopic", "prescient", "one-opt", "sw-rnd", "sw-a", "sw-r"};
  return methods;
}

bool method_registered(const std::string& name) {
  const auto& methods = registered_methods();
  return std::find(methods.begin(), methods.end(), name) != methods.end();
}

long long brute_force_cap() {
  if (const char* env = std::getenv("RALLOC_BRUTE_FORCE_CAP")) {
    char* end = nullptr;
    const long long cap = std::strtoll(env, &end, 10);
    if (end != env && cap > 0) return cap;
  }
  return kDefaultBruteForceCap;
}

SolveReport dispatch_method(const Instance& instance, const MethodSpec& spec,
                            bool trace_bounds) {
  const BoundMode mode =
      spec.convex_bounds ? BoundMode::convex : BoundMode::monotone;
  EvaluationLedger ledger(instance);
  if (spec.method == "myopic") {
    return run_myopic(instance, ledger, spec.max_iters);
  }
  if (spec.method == "prescient") {
    return run_prescient(instance, ledger, {mode, spec.max_iters});
  }
  if (spec.method == "one-opt") {
    return run_one_opt(instance, ledger, {mode, spec.max_iters, trace_bounds});
  }
  SandwichOptions options{DecisionRule::max_gap_restricted, spec.epsilon,
                          spec.seed,  mode,
                          spec.max_iters, trace_bounds};
  if (spec.method == "sw-rnd") {
    options.rule = DecisionRule::random;
  } else if (spec.method == "sw-a") {
    options.rule = DecisionRule::max_gap_all;
  } else if (spec.method != "sw-r") {
    std::ostringstream msg;
    msg << "unknown method '" << spec.method << "'; available:";
    for (const auto& m : registered_methods()) msg << " " << m;
    throw SpecInvalid(msg.str());
  }
  return run_sandwich(instance, ledger, options);
}

namespace {

std::string default_instance_id(const InstanceSource& source) {
  if (std::holds_alternative<std::filesystem::path>(source.source)) {
    return std::get<std::filesystem::path>(source.source).stem().string();
  }
  const GenSpec& spec = std::get<GenSpec>(source.source);
  std::ostringstream id;
  id << to_string(spec.family) << "-n" << spec.players << "-B"
     << spec.total_budget << "-s" << spec.seed;
  return id.str();
}

}  // namespace

std::vector<RunResult> run_suite(const SuiteConfig& config) {
  std::vector<RunResult> results;
  for (const InstanceSource& source : config.instances) {
    const std::string id =
        source.id.empty() ? default_instance_id(source) : source.id;

    std::optional<Instance> instance;
    std::string load_error;
    try {
      if (std::holds_alternative<std::filesystem::path>(source.source)) {
        instance = load_instance_file(
            std::get<std::filesystem::path>(source.source));
      } else {
        instance = generate(std::get<GenSpec>(source.source));
      }
    } catch (const std::exception& e) {
      load_error = e.what();
    }

    std::optional<double> optimum;
    if (instance && config.include_brute_force) {
      try {
        optimum = brute_force_solve(*instance, brute_force_cap()).value;
      } catch (const CapExceeded&) {
        // gap column stays empty
      }
    }

    for (const MethodSpec& method : config.methods) {
      RunResult row;
      row.instance_id = id;
      row.method = method.method;
      if (!instance) {
        row.error = load_error;
        results.push_back(std::move(row));
        continue;
      }
      const auto start = std::chrono::steady_clock::now();
      try {
        const SolveReport report =
            dispatch_method(*instance, method, config.trace_bounds);
        row.objective = report.true_objective;
        if (!row.objective &&
            report.objective_lower == report.objective_upper) {
          // collapsed interval: the value is exact even if some chosen
          // points were pinched rather than evaluated
          row.objective = report.objective_lower;
        }
        row.lower = report.objective_lower;
        row.upper = report.objective_upper;
        row.evals = report.evals;
        row.iterations = report.iterations;
        row.terminated_early = report.terminated_early;
        if (row.objective && optimum) {
          row.opt_gap = *row.objective - *optimum;
        }
        if (config.trace_dir) {
          std::filesystem::create_directories(*config.trace_dir);
          const auto path =
              *config.trace_dir / (id + "__" + method.method + ".json");
          std::ofstream out(path);
          if (!out) throw ParseError("cannot write " + path.string());
          out << report_to_json(report);
        }
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      row.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
      results.push_back(std::move(row));
    }
  }
  return results;
}

void write_csv(std::ostream& out, const std::vector<RunResult>& results) {
  out << "instance_id,method,objective,lb,ub,evals,iterations,opt_gap,"
         "wall_ms,terminated_early\n";
  for (const RunResult& row : results) {
    out << row.instance_id << ',' << row.method << ',';
    if (row.objective) out << format_number(*row.objective);
    out << ',';
    if (row.lower) out << format_number(*row.lower);
    out << ',';
    if (row.upper) out << format_number(*row.upper);
    out << ',';
    if (row.evals) out << *row.evals;
    out << ',';
    if (row.iterations) out << *row.iterations;
    out << ',';
    if (row.opt_gap) out << format_number(*row.opt_gap);
    out << ',' << format_number(row.wall_ms) << ','
        << (row.terminated_early ? 1 : 0) << '\n';
  }
}

SuiteConfig suite_config_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }

  SuiteConfig config;
  try {
    for (const auto& entry : j.at("instances")) {
      InstanceSource source;
      if (entry.is_string()) {
        source.source = std::filesystem::path(entry.get<std::string>());
      } else {
        source.id = entry.value("id", "");
        source.source = gen_spec_from_json(entry.dump());
      }
      config.instances.push_back(std::move(source));
    }
    for (const auto& entry : j.at("methods")) {
      MethodSpec spec;
      spec.method = entry.at("method").get<std::string>();
      if (!method_registered(spec.method)) {
        throw SpecInvalid("unknown method '" + spec.method + "'");
      }
      spec.epsilon = entry.value("epsilon", 0.0);
      spec.seed = entry.value("seed", std::uint64_t{0});
      spec.convex_bounds = entry.value("convex_bounds", false);
      if (entry.contains("max_iters") && !entry.at("max_iters").is_null()) {
        spec.max_iters = entry.at("max_iters").get<int>();
      }
      config.methods.push_back(std::move(spec));
    }
    config.include_brute_force = j.value("include_brute_force", true);
    config.trace_bounds = j.value("trace_bounds", false);
    if (j.contains("trace_dir") && !j.at("trace_dir").is_null()) {
      config.trace_dir =
          std::filesystem::path(j.at("trace_dir").get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed suite config: ") + e.what());
  }
  return config;
}

SuiteConfig load_suite_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return suite_config_from_json(buffer.str());
}

}  // namespace ralloc
