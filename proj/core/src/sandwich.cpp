#include "ralloc/sandwich.hpp"

#include <algorithm>

#include "method_common.hpp"

namespace ralloc {

SandwichRun::SandwichRun(const Instance& instance, EvaluationLedger& ledger,
                         const SandwichOptions& options)
    : instance_(instance),
      ledger_(ledger),
      options_(options),
      rng_(options.seed) {
  if (options_.epsilon < 0.0) {
    throw Error("epsilon must be non-negative");
  }
  seed_initial_points();
  rebuild();
}

void SandwichRun::seed_initial_points() {
  const int n = instance_.player_count();
  const int budget = instance_.total_budget();
  const int base = budget / n;
  const int leftover = budget - base * n;

  // floor(B/n) per player, the remainder spread from player one; counts
  // beyond an individual budget cascade to the following players (wrapping
  // once — total capacity exceeds B).
  std::vector<int> start(static_cast<std::size_t>(n));
  int carry = 0;
  for (int i = 0; i < n; ++i) {
    int want = base + (i < leftover ? 1 : 0) + carry;
    const int take = std::min(want, instance_.item_budget(i));
    carry = want - take;
    start[static_cast<std::size_t>(i)] = take;
  }
  for (int i = 0; i < n && carry > 0; ++i) {
    const int room =
        instance_.item_budget(i) - start[static_cast<std::size_t>(i)];
    const int take = std::min(room, carry);
    start[static_cast<std::size_t>(i)] += take;
    carry -= take;
  }
  for (int i = 0; i < n; ++i) {
    instance_.evaluate(ledger_, i, start[static_cast<std::size_t>(i)]);
  }
}

void SandwichRun::rebuild() {
  bounds_ = compute_bounds(instance_, ledger_, options_.bound_mode);
  lower_sol_ = solve_menu(PointMenu::from_bounds(bounds_, BoundSide::lower),
                          instance_.total_budget());
  if (options_.rule == DecisionRule::max_gap_restricted) {
    upper_sol_ = solve_menu(PointMenu::from_bounds(bounds_, BoundSide::upper),
                            instance_.total_budget());
  } else {
    upper_sol_.reset();
  }
  gap_ = 0.0;
  const Allocation& x = lower_sol_.allocation;
  for (int i = x.size() - 1; i >= 0; --i) {
    gap_ = bounds_.gap(i, x[i]) + gap_;
  }
}

double SandwichRun::upper_objective() const {
  return model_bound_objective(bounds_, lower_sol_.allocation,
                               BoundSide::upper);
}

std::optional<double> SandwichRun::upper_model_optimum() const {
  if (!upper_sol_) return std::nullopt;
  return upper_sol_->value;
}

std::pair<int, int> SandwichRun::select_point(DecisionRule rule) {
  const int n = instance_.player_count();

  if (rule == DecisionRule::random) {
    long long unevaluated = 0;
    for (int i = 0; i < n; ++i) {
      unevaluated += instance_.item_budget(i) + 1 -
                     ledger_.per_player_count()[static_cast<std::size_t>(i)];
    }
    if (unevaluated == 0) throw AllEvaluated("every point is evaluated");
    long long pick = static_cast<long long>(rng_() %
                                            static_cast<std::uint64_t>(unevaluated));
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k <= instance_.item_budget(i); ++k) {
        if (ledger_.evaluated(i, k)) continue;
        if (pick == 0) return {i, k};
        --pick;
      }
    }
    throw AllEvaluated("every point is evaluated");
  }

  if (rule == DecisionRule::max_gap_restricted) {
    SubSolution upper = upper_sol_
                            ? *upper_sol_
                            : solve_menu(PointMenu::from_bounds(
                                             bounds_, BoundSide::upper),
                                         instance_.total_budget());
    // Unevaluated points chosen by x_l and/or x_u, widest gap first.
    std::pair<int, int> best{-1, -1};
    double best_gap = 0.0;
    for (int i = 0; i < n; ++i) {
      for (const int k :
           {lower_sol_.allocation[i], upper.allocation[i]}) {
        if (ledger_.evaluated(i, k)) continue;
        const std::pair<int, int> cand{i, k};
        if (best.first < 0 || bounds_.gap(i, k) > best_gap ||
            (bounds_.gap(i, k) == best_gap && cand < best)) {
          best = cand;
          best_gap = bounds_.gap(i, k);
        }
      }
    }
    if (best.first >= 0) return best;
    return select_point(DecisionRule::max_gap_all);  // no candidate left
  }

  // max_gap_all: widest gap over every unevaluated point, lexicographic ties.
  std::pair<int, int> best{-1, -1};
  double best_gap = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= instance_.item_budget(i); ++k) {
      if (ledger_.evaluated(i, k)) continue;
      if (best.first < 0 || bounds_.gap(i, k) > best_gap) {
        best = {i, k};
        best_gap = bounds_.gap(i, k);
      }
    }
  }
  if (best.first < 0) throw AllEvaluated("every point is evaluated");
  return best;
}

void SandwichRun::step() {
  const auto [player, items] = select_point(options_.rule);
  instance_.evaluate(ledger_, player, items);
  ++iteration_;
  rebuild();
}

SolveReport run_sandwich(const Instance& instance, EvaluationLedger& ledger,
                         const SandwichOptions& options) {
  SolveReport report;
  switch (options.rule) {
    case DecisionRule::random:
      report.method = "sw-rnd";
      break;
    case DecisionRule::max_gap_all:
      report.method = "sw-a";
      break;
    case DecisionRule::max_gap_restricted:
      report.method = "sw-r";
      break;
  }

  SandwichRun run(instance, ledger, options);
  const int iter_cap = options.max_iters.value_or(
      static_cast<int>(instance.item_budget_sum()) + instance.player_count());
  while (!run.done() && run.iteration() < iter_cap) {
    run.step();
    TraceEntry entry{run.iteration(), run.lower_solution(),
                     run.lower_objective(), run.upper_objective(),
                     ledger.eval_count(), run.upper_model_optimum(),
                     std::nullopt};
    if (options.trace_bounds) {
      entry.bounds =
          BoundSnapshot{run.bounds().lower_rows(), run.bounds().upper_rows()};
    }
    report.trace.push_back(std::move(entry));
  }

  report.iterations = run.iteration();
  report.terminated_early = !run.done();
  report.heuristic_bounds = run.bounds().heuristic();
  report.allocation = run.lower_solution();
  report.objective_lower = run.lower_objective();
  report.objective_upper = run.upper_objective();
  if (detail::allocation_evaluated(ledger, report.allocation)) {
    report.true_objective = objective_value(report.allocation, ledger);
  }
  report.evals = ledger.eval_count();
  return report;
}

}  // namespace ralloc
