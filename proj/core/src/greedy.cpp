#include "ralloc/greedy.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "method_common.hpp"

namespace ralloc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double immediate_gain(const EvaluationLedger& ledger, int player, int items) {
  if (items + 1 >= ledger.row_size(player)) {
    std::ostringstream msg;
    msg << "immediate gain undefined at the budget point k = " << items;
    throw MissingValue(msg.str());
  }
  return ledger.value(player, items) - ledger.value(player, items + 1);
}

double prescient_score(const Instance& instance, const EvaluationLedger& ledger,
                       const BoundModel& bounds, int player, int items,
                       int iteration) {
  const int horizon = std::min(instance.item_budget(player),
                               items + instance.total_budget() - iteration);
  if (horizon == items) return immediate_gain(ledger, player, items);
  const double average =
      (ledger.value(player, items) - bounds.upper(player, horizon)) /
      static_cast<double>(horizon - items);
  return std::max(immediate_gain(ledger, player, items), average);
}

namespace {

// Lowest-index argmax over the active set; scores use exact comparison.
int pick_max(const std::vector<bool>& active, const std::vector<double>& score) {
  int best = -1;
  for (int i = 0; i < static_cast<int>(active.size()); ++i) {
    if (!active[static_cast<std::size_t>(i)]) continue;
    if (best < 0 || score[static_cast<std::size_t>(i)] >
                        score[static_cast<std::size_t>(best)]) {
      best = i;
    }
  }
  return best;
}

int pick_min(const std::vector<bool>& active, const std::vector<double>& score) {
  int best = -1;
  for (int i = 0; i < static_cast<int>(active.size()); ++i) {
    if (!active[static_cast<std::size_t>(i)]) continue;
    if (best < 0 || score[static_cast<std::size_t>(i)] <
                        score[static_cast<std::size_t>(best)]) {
      best = i;
    }
  }
  return best;
}

void push_trace(SolveReport& report, int iteration, const Allocation& x,
                const EvaluationLedger& ledger) {
  // Greedy allocations sit on evaluated points, so the value is exact.
  const double z = objective_value(x, ledger);
  report.trace.push_back(TraceEntry{iteration, x, z, z, ledger.eval_count(),
                                    std::nullopt, std::nullopt});
}

// Deterministic completion of a truncated run: pad or trim to sum(x) = B
// without spending evaluations.
Allocation complete_truncated(const Instance& instance, Allocation x) {
  long long total = x.sum();
  for (int i = 0; i < instance.player_count() && total < instance.total_budget();
       ++i) {
    const int room = instance.item_budget(i) - x[i];
    const int add = static_cast<int>(std::min<long long>(
        room, instance.total_budget() - total));
    x.items[static_cast<std::size_t>(i)] += add;
    total += add;
  }
  for (int i = 0; i < instance.player_count() && total > instance.total_budget();
       ++i) {
    const int drop = static_cast<int>(
        std::min<long long>(x[i], total - instance.total_budget()));
    x.items[static_cast<std::size_t>(i)] -= drop;
    total -= drop;
  }
  return x;
}

template <typename ScoreFn>
SolveReport run_constructive(const Instance& instance, EvaluationLedger& ledger,
                             const char* name, std::optional<int> max_iters,
                             bool prescient, BoundMode bound_mode) {
  SolveReport report;
  report.method = name;
  const int n = instance.player_count();
  const int total_budget = instance.total_budget();
  const long long budget_sum = instance.item_budget_sum();
  const bool additive = 2LL * total_budget <= budget_sum;
  report.variant = additive ? "additive" : "removal";

  Allocation x(std::vector<int>(static_cast<std::size_t>(n), 0));
  std::vector<bool> active(static_cast<std::size_t>(n), true);
  std::vector<double> score(static_cast<std::size_t>(n), 0.0);
  BoundModel bounds;

  const int total_iters =
      additive ? total_budget : static_cast<int>(budget_sum - total_budget);
  const int iter_cap = std::min(total_iters, max_iters.value_or(total_iters));

  if (additive) {
    for (int i = 0; i < n; ++i) {
      instance.evaluate(ledger, i, 0);
      instance.evaluate(ledger, i, 1);
      if (prescient) instance.evaluate(ledger, i, instance.item_budget(i));
    }
  } else {
    for (int i = 0; i < n; ++i) {
      x.items[static_cast<std::size_t>(i)] = instance.item_budget(i);
      instance.evaluate(ledger, i, instance.item_budget(i));
      instance.evaluate(ledger, i, instance.item_budget(i) - 1);
      if (prescient) instance.evaluate(ledger, i, 0);
    }
  }

  int t = 0;
  for (; t < iter_cap; ++t) {
    if (prescient) {
      bounds = compute_bounds(instance, ledger, bound_mode);
      report.heuristic_bounds = bounds.heuristic();
    }
    for (int i = 0; i < n; ++i) {
      if (!active[static_cast<std::size_t>(i)]) continue;
      score[static_cast<std::size_t>(i)] = ScoreFn{}(
          instance, ledger, bounds, i, x[i], t, additive, budget_sum);
    }
    const int j = additive ? pick_max(active, score) : pick_min(active, score);
    const int moved = x[j] + (additive ? 1 : -1);
    x.items[static_cast<std::size_t>(j)] = moved;

    if (additive) {
      if (moved < instance.item_budget(j) && t < total_iters - 1) {
        instance.evaluate(ledger, j, moved + 1);
      } else if (moved == instance.item_budget(j)) {
        active[static_cast<std::size_t>(j)] = false;
      }
    } else {
      if (moved > 0 && t < total_iters - 1) {
        instance.evaluate(ledger, j, moved - 1);
      } else if (moved == 0) {
        active[static_cast<std::size_t>(j)] = false;
      }
    }
    push_trace(report, t + 1, x, ledger);
  }

  report.iterations = t;
  report.terminated_early = t < total_iters;
  if (report.terminated_early) x = complete_truncated(instance, x);
  detail::finalize_objective(instance, ledger, x, report);
  return report;
}

struct MyopicScore {
  double operator()(const Instance&, const EvaluationLedger& ledger,
                    const BoundModel&, int i, int x_i, int, bool additive,
                    long long) const {
    // Additive: gain of one more item; removal: loss of the last item.
    return additive ? immediate_gain(ledger, i, x_i)
                    : ledger.value(i, x_i - 1) - ledger.value(i, x_i);
  }
};

struct PrescientScoreFn {
  double operator()(const Instance& instance, const EvaluationLedger& ledger,
                    const BoundModel& bounds, int i, int x_i, int t,
                    bool additive, long long budget_sum) const {
    if (additive) return prescient_score(instance, ledger, bounds, i, x_i, t);
    const double immediate = ledger.value(i, x_i - 1) - ledger.value(i, x_i);
    const int removals_left =
        static_cast<int>(budget_sum - instance.total_budget()) - t;
    const int floor_items = std::max(0, x_i - removals_left);
    if (floor_items == x_i) return immediate;
    const double average = (bounds.lower(i, floor_items) - ledger.value(i, x_i)) /
                           static_cast<double>(x_i - floor_items);
    return std::min(immediate, average);
  }
};

}  // namespace

SolveReport run_myopic(const Instance& instance, EvaluationLedger& ledger,
                       std::optional<int> max_iters) {
  return run_constructive<MyopicScore>(instance, ledger, "myopic", max_iters,
                                       /*prescient=*/false,
                                       BoundMode::monotone);
}

SolveReport run_prescient(const Instance& instance, EvaluationLedger& ledger,
                          const PrescientOptions& options) {
  return run_constructive<PrescientScoreFn>(instance, ledger, "prescient",
                                            options.max_iters,
                                            /*prescient=*/true,
                                            options.bound_mode);
}

}  // namespace ralloc
