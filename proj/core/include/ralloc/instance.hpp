#pragma once

#include <compare>
#include <vector>

#include "ralloc/errors.hpp"

namespace ralloc {

class EvaluationLedger;
class Instance;

/// Integer item counts per player (the decision vector x).
struct Allocation {
  std::vector<int> items;

  Allocation() = default;
  explicit Allocation(std::vector<int> x) : items(std::move(x)) {}

  int size() const { return static_cast<int>(items.size()); }
  int operator[](int i) const { return items[static_cast<std::size_t>(i)]; }

  long long sum() const;

  /// Right length and 0 <= x_i <= b_i.
  bool fits(const Instance& instance) const;
  /// fits() and sum() == B.
  bool feasible(const Instance& instance) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;
  friend auto operator<=>(const Allocation&, const Allocation&) = default;
};

/// Problem data: player budgets b, total budget B, value cap M, and the cost
/// table. The table is sealed: solution methods read it only through
/// evaluate(), which records every access in an EvaluationLedger. peek()
/// bypasses the ledger and exists for reference computations (brute force,
/// test oracles, file export), never for solvers.
class Instance {
public:
  /// Constructs without checking the problem assumptions (shape consistency
  /// is still required). Prefer create_instance().
  static Instance unchecked(std::vector<int> item_budgets, int total_budget,
                            double value_cap,
                            std::vector<std::vector<double>> costs,
                            bool convex = false);

  int player_count() const { return static_cast<int>(item_budgets_.size()); }
  int total_budget() const { return total_budget_; }
  double value_cap() const { return value_cap_; }
  const std::vector<int>& item_budgets() const { return item_budgets_; }
  int item_budget(int player) const {
    return item_budgets_[static_cast<std::size_t>(player)];
  }
  /// sum(b), the full-enumeration point count minus n.
  long long item_budget_sum() const;
  bool convex_flagged() const { return convex_; }

  /// Counting oracle: returns f_i(k) and marks the point evaluated in the
  /// ledger. Re-evaluating a known point is free (idempotent counting).
  double evaluate(EvaluationLedger& ledger, int player, int items) const;

  /// Direct table read bypassing the ledger.
  double peek(int player, int items) const;

private:
  Instance(std::vector<int> b, int total_budget, double value_cap,
           std::vector<std::vector<double>> costs, bool convex);

  std::vector<int> item_budgets_;
  int total_budget_ = 0;
  double value_cap_ = 0.0;
  std::vector<std::vector<double>> costs_;
  bool convex_ = false;

  friend Instance create_instance(std::vector<int>, int, double,
                                  std::vector<std::vector<double>>, bool);
};

/// Validates all problem assumptions eagerly and returns the instance.
/// Throws AssumptionViolation naming the violated clause.
Instance create_instance(std::vector<int> item_budgets, int total_budget,
                         double value_cap,
                         std::vector<std::vector<double>> costs,
                         bool convex = false);

}  // namespace ralloc
