// ralloc: generate, solve and benchmark separable integer resource
// allocation instances with expensive black-box cost evaluations.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ralloc/errors.hpp"
#include "ralloc/instance_gen.hpp"
#include "ralloc/json_io.hpp"
#include "ralloc/ledger.hpp"
#include "ralloc/subsolver.hpp"
#include "ralloc/suite.hpp"

namespace {

std::vector<int> parse_budgets(const std::string& text) {
  std::vector<int> budgets;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    budgets.push_back(std::stoi(token));
  }
  if (budgets.empty()) throw ralloc::SpecInvalid("empty budget list");
  return budgets;
}

void write_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ralloc::ParseError("cannot write " + path);
  out << text;
}

int run(int argc, char** argv) {
  CLI::App app{"evaluation-frugal solvers for separable integer resource "
               "allocation"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random instance file");
  std::string gen_family = "convex";
  int gen_n = 5;
  std::string gen_b = "10";
  int gen_B = 0;
  double gen_M = 100.0;
  std::uint64_t gen_seed = 0;
  double gen_perturbation = 0.1;
  std::string gen_out;
  gen->add_option("--family", gen_family,
                  "convex | monotone | near-convex")->capture_default_str();
  gen->add_option("--n", gen_n, "number of players")->capture_default_str();
  gen->add_option("--b", gen_b,
                  "item budget, single value or comma list")
      ->capture_default_str();
  gen->add_option("--B", gen_B, "total allocation budget")->required();
  gen->add_option("--M", gen_M, "universal value cap")->capture_default_str();
  gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
  gen->add_option("--perturbation", gen_perturbation,
                  "near-convex drop perturbation in [0, 1]")
      ->capture_default_str();
  gen->add_option("--out", gen_out, "output file (stdout when omitted)");

  // solve
  auto* solve = app.add_subcommand("solve", "run one method on an instance");
  std::string solve_method;
  std::string solve_instance;
  double solve_epsilon = 0.0;
  std::uint64_t solve_seed = 0;
  bool solve_convex_bounds = false;
  std::optional<int> solve_max_iters;
  std::string solve_report;
  bool solve_verbose = false;
  solve->add_option("--method", solve_method,
                    "myopic | prescient | one-opt | sw-rnd | sw-a | sw-r")
      ->required();
  solve->add_option("--instance", solve_instance, "instance JSON file")
      ->required();
  solve->add_option("--epsilon", solve_epsilon, "sandwich gap tolerance")
      ->capture_default_str();
  solve->add_option("--seed", solve_seed, "rng seed (sw-rnd)")
      ->capture_default_str();
  solve->add_flag("--convex-bounds", solve_convex_bounds,
                  "use convexity-based bounds");
  solve->add_option("--max-iters", solve_max_iters,
                    "stop after this many iterations");
  solve->add_option("--report", solve_report,
                    "report JSON file (stdout when omitted)");
  solve->add_flag("--verbose", solve_verbose,
                  "record bound matrices in the trace");

  // bench
  auto* bench = app.add_subcommand("bench", "run a suite config to CSV");
  std::string bench_config;
  std::string bench_out;
  bench->add_option("--config", bench_config, "suite config JSON file")
      ->required();
  bench->add_option("--out", bench_out, "results CSV file (stdout when omitted)");

  // export-ilp
  auto* export_ilp = app.add_subcommand(
      "export-ilp", "write the instance's binary program in CPLEX LP format");
  std::string export_instance;
  std::string export_out;
  export_ilp->add_option("--instance", export_instance, "instance JSON file")
      ->required();
  export_ilp->add_option("--out", export_out,
                         "LP file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      ralloc::GenSpec spec;
      spec.family = ralloc::family_from_string(gen_family);
      spec.players = gen_n;
      spec.item_budgets = parse_budgets(gen_b);
      spec.total_budget = gen_B;
      spec.value_cap = gen_M;
      spec.seed = gen_seed;
      spec.perturbation = gen_perturbation;
      write_text(ralloc::instance_to_json(ralloc::generate(spec)), gen_out);
    } else if (solve->parsed()) {
      if (!ralloc::method_registered(solve_method)) {
        std::ostringstream msg;
        msg << "unknown method '" << solve_method << "'; available:";
        for (const auto& m : ralloc::registered_methods()) msg << " " << m;
        throw ralloc::SpecInvalid(msg.str());
      }
      const ralloc::Instance instance =
          ralloc::load_instance_file(solve_instance);
      ralloc::MethodSpec spec{solve_method, solve_epsilon, solve_seed,
                              solve_convex_bounds, solve_max_iters};
      const ralloc::SolveReport report =
          ralloc::dispatch_method(instance, spec, solve_verbose);
      write_text(ralloc::report_to_json(report), solve_report);
    } else if (bench->parsed()) {
      const ralloc::SuiteConfig config =
          ralloc::load_suite_config(bench_config);
      const auto results = ralloc::run_suite(config);
      std::ostringstream csv;
      ralloc::write_csv(csv, results);
      write_text(csv.str(), bench_out);
      for (const auto& row : results) {
        if (!row.error.empty()) {
          std::cerr << row.instance_id << "/" << row.method << ": "
                    << row.error << "\n";
        }
      }
    } else if (export_ilp->parsed()) {
      const ralloc::Instance instance =
          ralloc::load_instance_file(export_instance);
      ralloc::PointMenu menu(instance.player_count());
      for (int i = 0; i < instance.player_count(); ++i) {
        for (int k = 0; k <= instance.item_budget(i); ++k) {
          menu.add(i, k, instance.peek(i, k));
        }
      }
      write_text(ralloc::export_ilp(menu, instance.total_budget()),
                 export_out);
    }
  } catch (const ralloc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
