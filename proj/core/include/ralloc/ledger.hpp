#pragma once

#include <concepts>
#include <optional>
#include <utility>
#include <vector>

#include "ralloc/errors.hpp"
#include "ralloc/instance.hpp"

namespace ralloc {

/// The evaluation matrix V plus cached values and counters. Entries are
/// written exclusively by Instance::evaluate; once written they never change
/// and the distinct-point counter never decreases.
class EvaluationLedger {
public:
  explicit EvaluationLedger(const Instance& instance);

  int player_count() const { return static_cast<int>(values_.size()); }
  int row_size(int player) const {
    return static_cast<int>(values_[static_cast<std::size_t>(player)].size());
  }

  bool evaluated(int player, int items) const;

  /// Cached f_i(k); throws MissingValue if the point was never evaluated.
  double value(int player, int items) const;
  std::optional<double> try_value(int player, int items) const;

  /// Number of distinct points evaluated so far.
  long long eval_count() const { return eval_count_; }
  const std::vector<int>& per_player_count() const { return per_player_count_; }

  /// Evaluated (k, value) pairs of one row, ascending in k.
  std::vector<std::pair<int, double>> evaluated_points(int player) const;

private:
  friend class Instance;  // sole writer, via Instance::evaluate
  void record(int player, int items, double value);
  void check_index(int player, int items) const;

  std::vector<std::vector<std::optional<double>>> values_;
  std::vector<int> per_player_count_;
  long long eval_count_ = 0;
};

/// z(x, c) = sum_i c(i, x_i). The callable signals an undefined point by
/// throwing (the ledger overload throws MissingValue). Terms accumulate from
/// the last player so totals match the subsolver's suffix sums bitwise.
template <typename ValueFn>
  requires std::invocable<ValueFn&, int, int>
double objective_value(const Allocation& x, ValueFn&& value_fn) {
  double total = 0.0;
  for (int i = x.size() - 1; i >= 0; --i) {
    total = value_fn(i, x[i]) + total;
  }
  return total;
}

/// z(x, f) over cached values; MissingValue if any (i, x_i) is unevaluated.
double objective_value(const Allocation& x, const EvaluationLedger& ledger);

}  // namespace ralloc
