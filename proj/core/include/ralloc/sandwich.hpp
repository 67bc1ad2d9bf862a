#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>

#include "ralloc/bounds.hpp"
#include "ralloc/instance.hpp"
#include "ralloc/ledger.hpp"
#include "ralloc/report.hpp"
#include "ralloc/subsolver.hpp"

namespace ralloc {

/// Point-selection rules for the sandwich method.
enum class DecisionRule {
  random,              // sw-rnd: uniform over unevaluated points
  max_gap_all,         // sw-a: largest u-l gap over all unevaluated points
  max_gap_restricted,  // sw-r: largest gap among points of x_l and/or x_u
};

struct SandwichOptions {
  DecisionRule rule = DecisionRule::max_gap_restricted;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  BoundMode bound_mode = BoundMode::monotone;
  std::optional<int> max_iters;
  bool trace_bounds = false;
};

/// Iterative bound-tightening solver. Maintains bound curves l, u, the
/// lower-model optimum x_l, and the objective gap
///   g = z(x_l, u) - z(x_l, l).
/// Each step evaluates one point chosen by the decision rule; the run has
/// converged once g <= epsilon, at which point x_l is within epsilon of the
/// true optimum (exactly optimal for epsilon = 0), for convex and
/// non-convex rows alike.
class SandwichRun {
public:
  SandwichRun(const Instance& instance, EvaluationLedger& ledger,
              const SandwichOptions& options);

  bool done() const { return gap_ <= options_.epsilon; }
  double gap() const { return gap_; }

  /// Applies a decision rule to the current state; throws AllEvaluated when
  /// no unevaluated point remains. SW-R falls back on SW-A when no point of
  /// x_l or x_u is unevaluated.
  std::pair<int, int> select_point(DecisionRule rule);

  /// One iteration: select with the configured rule, evaluate, rebuild
  /// bounds, re-solve the lower problem and recompute the gap.
  void step();

  int iteration() const { return iteration_; }
  const Allocation& lower_solution() const { return lower_sol_.allocation; }
  /// z(x_l, l) = z*(l), a lower bound on the true optimum.
  double lower_objective() const { return lower_sol_.value; }
  /// z(x_l, u), an upper bound on the true objective of x_l.
  double upper_objective() const;
  const BoundModel& bounds() const { return bounds_; }
  /// z*(u); computed only under SW-R.
  std::optional<double> upper_model_optimum() const;

private:
  void seed_initial_points();
  void rebuild();

  const Instance& instance_;
  EvaluationLedger& ledger_;
  SandwichOptions options_;
  std::mt19937_64 rng_;
  int iteration_ = 0;
  BoundModel bounds_;
  SubSolution lower_sol_;
  std::optional<SubSolution> upper_sol_;
  double gap_ = 0.0;
};

/// Runs the sandwich method until g <= epsilon or max_iters.
SolveReport run_sandwich(const Instance& instance, EvaluationLedger& ledger,
                         const SandwichOptions& options);

}  // namespace ralloc
