#include "ralloc/one_opt.hpp"

#include <algorithm>
#include <limits>

#include "method_common.hpp"

namespace ralloc {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}  // namespace

OneOptRun::OneOptRun(const Instance& instance, EvaluationLedger& ledger,
                     BoundMode bound_mode)
    : instance_(instance), ledger_(ledger), bound_mode_(bound_mode) {
  seed_initial_points();
  resolve();
}

void OneOptRun::seed_initial_points() {
  const int n = instance_.player_count();
  const int budget = instance_.total_budget();
  std::vector<int> left(static_cast<std::size_t>(n));
  std::vector<int> right(static_cast<std::size_t>(n));
  long long achievable_min = 0;
  long long achievable_max = 0;
  for (int i = 0; i < n; ++i) {
    const int anchor = std::min(budget / n, instance_.item_budget(i) - 1);
    instance_.evaluate(ledger_, i, anchor);
    instance_.evaluate(ledger_, i, anchor + 1);
    left[static_cast<std::size_t>(i)] = anchor;
    right[static_cast<std::size_t>(i)] = anchor + 1;
    achievable_min += anchor;
    achievable_max += anchor + 1;
  }
  // Widen the contiguous evaluated blocks until some selection sums to B.
  while (achievable_max < budget) {
    bool widened = false;
    for (int i = 0; i < n && !widened; ++i) {
      if (right[static_cast<std::size_t>(i)] < instance_.item_budget(i)) {
        instance_.evaluate(ledger_, i, ++right[static_cast<std::size_t>(i)]);
        ++achievable_max;
        widened = true;
      }
    }
    if (!widened) throw Error("total budget exceeds the item budgets");
  }
  while (achievable_min > budget) {
    bool widened = false;
    for (int i = 0; i < n && !widened; ++i) {
      if (left[static_cast<std::size_t>(i)] > 0) {
        instance_.evaluate(ledger_, i, --left[static_cast<std::size_t>(i)]);
        --achievable_min;
        widened = true;
      }
    }
    if (!widened) throw Error("cannot reach the total budget from zero");
  }
}

void OneOptRun::resolve() {
  const int n = instance_.player_count();
  const SubSolution sol =
      solve_menu(PointMenu::from_ledger(instance_, ledger_),
                 instance_.total_budget());
  allocation_ = sol.allocation;
  restricted_value_ = sol.value;
  bounds_ = compute_bounds(instance_, ledger_, bound_mode_);

  theta_.assign(static_cast<std::size_t>(n), kNaN);
  eta_.assign(static_cast<std::size_t>(n), kNaN);
  for (int i = 0; i < n; ++i) {
    const int x = allocation_[i];
    const double f_x = ledger_.value(i, x);
    if (x > 0) {
      theta_[static_cast<std::size_t>(i)] = bounds_.lower(i, x - 1) - f_x;
    }
    if (x < instance_.item_budget(i)) {
      eta_[static_cast<std::size_t>(i)] = f_x - bounds_.lower(i, x + 1);
    }
  }

  swap_margin_ = kNegInf;
  margin_pair_ = {-1, -1};
  for (int i = 0; i < n; ++i) {
    if (allocation_[i] <= 0) continue;  // i in S-
    for (int j = 0; j < n; ++j) {
      if (j == i || allocation_[j] >= instance_.item_budget(j)) continue;
      const double margin = eta_[static_cast<std::size_t>(j)] -
                            theta_[static_cast<std::size_t>(i)];
      if (margin > swap_margin_) {
        swap_margin_ = margin;
        margin_pair_ = {i, j};
      }
    }
  }
}

OneOptRun::Gains OneOptRun::best_case_gains() const {
  const int n = instance_.player_count();
  Gains gains;
  gains.add.assign(static_cast<std::size_t>(n), kNegInf);
  gains.remove.assign(static_cast<std::size_t>(n), kNegInf);

  for (int i = 0; i < n; ++i) {
    // Delta+_i: evaluate above i, pay with the cheapest known removal.
    if (allocation_[i] < instance_.item_budget(i) &&
        !ledger_.evaluated(i, allocation_[i] + 1)) {
      double cheapest = std::numeric_limits<double>::infinity();
      for (int j = 0; j < n; ++j) {
        if (j == i || allocation_[j] <= 0) continue;
        if (!ledger_.evaluated(j, allocation_[j] - 1)) continue;
        cheapest = std::min(cheapest, theta_[static_cast<std::size_t>(j)]);
      }
      if (cheapest != std::numeric_limits<double>::infinity()) {
        gains.add[static_cast<std::size_t>(i)] =
            eta_[static_cast<std::size_t>(i)] - cheapest;
      }
    }
    // Delta-_i: evaluate below i, gain at the best known addition.
    if (allocation_[i] > 0 && !ledger_.evaluated(i, allocation_[i] - 1)) {
      double best_gain = kNegInf;
      for (int j = 0; j < n; ++j) {
        if (j == i || allocation_[j] >= instance_.item_budget(j)) continue;
        if (!ledger_.evaluated(j, allocation_[j] + 1)) continue;
        best_gain = std::max(best_gain, eta_[static_cast<std::size_t>(j)]);
      }
      if (best_gain != kNegInf) {
        gains.remove[static_cast<std::size_t>(i)] =
            best_gain - theta_[static_cast<std::size_t>(i)];
      }
    }
  }
  return gains;
}

void OneOptRun::step() {
  const Gains gains = best_case_gains();
  int chosen = -1;
  double best = kNegInf;
  for (int i = 0; i < instance_.player_count(); ++i) {
    const double m = std::max(gains.add[static_cast<std::size_t>(i)],
                              gains.remove[static_cast<std::size_t>(i)]);
    if (m > best) {
      best = m;
      chosen = i;
    }
  }

  if (chosen < 0) {
    if (margin_pair_.first < 0) {
      throw Error("no eligible 1-opt move: the run has converged");
    }
    // Every gain is -inf while d > 0: the selection rule is undefined, so
    // probe the pair attaining d. At least one of its two target points is
    // unevaluated, else the restricted optimum would already cover the swap.
    const auto [remove_from, add_to] = margin_pair_;
    if (!ledger_.evaluated(add_to, allocation_[add_to] + 1)) {
      instance_.evaluate(ledger_, add_to, allocation_[add_to] + 1);
    } else {
      instance_.evaluate(ledger_, remove_from, allocation_[remove_from] - 1);
    }
  } else {
    const int direction = gains.remove[static_cast<std::size_t>(chosen)] <
                                  gains.add[static_cast<std::size_t>(chosen)]
                              ? 1
                              : -1;
    instance_.evaluate(ledger_, chosen, allocation_[chosen] + direction);
  }
  ++iteration_;
  resolve();
}

SolveReport run_one_opt(const Instance& instance, EvaluationLedger& ledger,
                        const OneOptOptions& options) {
  SolveReport report;
  report.method = "one-opt";
  OneOptRun run(instance, ledger, options.bound_mode);

  const int iter_cap = options.max_iters.value_or(
      static_cast<int>(instance.item_budget_sum()) + instance.player_count());
  while (!run.done() && run.iteration() < iter_cap) {
    run.step();
    TraceEntry entry{run.iteration(), run.allocation(), run.current_objective(),
                     run.current_objective(), ledger.eval_count(), std::nullopt,
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
  detail::finalize_objective(instance, ledger, run.allocation(), report);
  return report;
}

}  // namespace ralloc
