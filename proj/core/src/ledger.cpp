#include "ralloc/ledger.hpp"

#include <sstream>

namespace ralloc {

EvaluationLedger::EvaluationLedger(const Instance& instance)
    : per_player_count_(static_cast<std::size_t>(instance.player_count()), 0) {
  values_.reserve(static_cast<std::size_t>(instance.player_count()));
  for (int i = 0; i < instance.player_count(); ++i) {
    values_.emplace_back(static_cast<std::size_t>(instance.item_budget(i)) + 1);
  }
}

void EvaluationLedger::check_index(int player, int items) const {
  if (player < 0 || player >= player_count() || items < 0 ||
      items >= row_size(player)) {
    std::ostringstream msg;
    msg << "point (" << player << ", " << items << ") outside the ledger";
    throw IndexOutOfRange(msg.str());
  }
}

bool EvaluationLedger::evaluated(int player, int items) const {
  check_index(player, items);
  return values_[static_cast<std::size_t>(player)]
                [static_cast<std::size_t>(items)]
      .has_value();
}

double EvaluationLedger::value(int player, int items) const {
  check_index(player, items);
  const auto& cell = values_[static_cast<std::size_t>(player)]
                            [static_cast<std::size_t>(items)];
  if (!cell) {
    std::ostringstream msg;
    msg << "f_" << player << "(" << items << ") has not been evaluated";
    throw MissingValue(msg.str());
  }
  return *cell;
}

std::optional<double> EvaluationLedger::try_value(int player, int items) const {
  check_index(player, items);
  return values_[static_cast<std::size_t>(player)]
                [static_cast<std::size_t>(items)];
}

std::vector<std::pair<int, double>> EvaluationLedger::evaluated_points(
    int player) const {
  std::vector<std::pair<int, double>> points;
  const auto& row = values_[static_cast<std::size_t>(player)];
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (row[k]) points.emplace_back(static_cast<int>(k), *row[k]);
  }
  return points;
}

void EvaluationLedger::record(int player, int items, double value) {
  check_index(player, items);
  auto& cell =
      values_[static_cast<std::size_t>(player)][static_cast<std::size_t>(items)];
  if (cell) return;  // cache hit: values never change, count never moves
  cell = value;
  ++per_player_count_[static_cast<std::size_t>(player)];
  ++eval_count_;
}

double objective_value(const Allocation& x, const EvaluationLedger& ledger) {
  return objective_value(
      x, [&ledger](int i, int k) { return ledger.value(i, k); });
}

}  // namespace ralloc
