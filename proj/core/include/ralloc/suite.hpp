#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "ralloc/instance.hpp"
#include "ralloc/instance_gen.hpp"
#include "ralloc/report.hpp"

namespace ralloc {

/// One method invocation in a suite.
struct MethodSpec {
  std::string method;  // myopic | prescient | one-opt | sw-rnd | sw-a | sw-r
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  bool convex_bounds = false;
  std::optional<int> max_iters;
};

struct InstanceSource {
  std::string id;
  std::variant<std::filesystem::path, GenSpec> source;
};

struct SuiteConfig {
  std::vector<InstanceSource> instances;
  std::vector<MethodSpec> methods;
  bool include_brute_force = true;
  std::optional<std::filesystem::path> trace_dir;
  bool trace_bounds = false;
};

/// One row of the results table. Numeric fields stay unset when the run
/// failed; the error message is captured instead of aborting the suite.
struct RunResult {
  std::string instance_id;
  std::string method;
  std::optional<double> objective;
  std::optional<double> lower;
  std::optional<double> upper;
  std::optional<long long> evals;
  std::optional<int> iterations;
  std::optional<double> opt_gap;
  double wall_ms = 0.0;
  bool terminated_early = false;
  std::string error;
};

const std::vector<std::string>& registered_methods();
bool method_registered(const std::string& name);

/// Runs one method on a fresh ledger. Unknown identifiers raise SpecInvalid.
SolveReport dispatch_method(const Instance& instance, const MethodSpec& spec,
                            bool trace_bounds = false);

/// Executes every (instance, method) pair; deterministic given the seeds.
std::vector<RunResult> run_suite(const SuiteConfig& config);

/// Fixed column order:
/// instance_id,method,objective,lb,ub,evals,iterations,opt_gap,wall_ms,terminated_early
void write_csv(std::ostream& out, const std::vector<RunResult>& results);

SuiteConfig suite_config_from_json(const std::string& text);
SuiteConfig load_suite_config(const std::filesystem::path& path);

/// RALLOC_BRUTE_FORCE_CAP environment override of the enumeration cap.
long long brute_force_cap();

}  // namespace ralloc
