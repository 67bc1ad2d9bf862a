#include "ralloc/instance.hpp"

#include <numeric>
#include <sstream>

#include "ralloc/ledger.hpp"

namespace ralloc {

const char* to_string(AssumptionClause clause) {
  switch (clause) {
    case AssumptionClause::shape_mismatch:
      return "shape mismatch";
    case AssumptionClause::total_budget_not_binding:
      return "total budget not binding (sum(b) <= B)";
    case AssumptionClause::individual_budget_exceeds_total:
      return "individual budget exceeds total (B < b_i)";
    case AssumptionClause::value_out_of_range:
      return "cost value outside [0, M]";
    case AssumptionClause::row_not_monotone:
      return "cost row not non-increasing";
    case AssumptionClause::row_not_convex:
      return "convex-flagged row not convex";
  }
  return "unknown clause";
}

AssumptionViolation::AssumptionViolation(AssumptionClause clause,
                                         const std::string& detail)
    : Error(std::string(to_string(clause)) + ": " + detail), clause_(clause) {}

long long Allocation::sum() const {
  return std::accumulate(items.begin(), items.end(), 0LL);
}

bool Allocation::fits(const Instance& instance) const {
  if (size() != instance.player_count()) return false;
  for (int i = 0; i < size(); ++i) {
    if ((*this)[i] < 0 || (*this)[i] > instance.item_budget(i)) return false;
  }
  return true;
}

bool Allocation::feasible(const Instance& instance) const {
  return fits(instance) && sum() == instance.total_budget();
}

Instance::Instance(std::vector<int> b, int total_budget, double value_cap,
                   std::vector<std::vector<double>> costs, bool convex)
    : item_budgets_(std::move(b)),
      total_budget_(total_budget),
      value_cap_(value_cap),
      costs_(std::move(costs)),
      convex_(convex) {}

Instance Instance::unchecked(std::vector<int> item_budgets, int total_budget,
                             double value_cap,
                             std::vector<std::vector<double>> costs,
                             bool convex) {
  if (item_budgets.empty() || costs.size() != item_budgets.size()) {
    throw AssumptionViolation(AssumptionClause::shape_mismatch,
                              "need one cost row per player");
  }
  for (std::size_t i = 0; i < item_budgets.size(); ++i) {
    if (item_budgets[i] < 1) {
      throw AssumptionViolation(AssumptionClause::shape_mismatch,
                                "item budgets must be positive");
    }
    if (costs[i].size() != static_cast<std::size_t>(item_budgets[i]) + 1) {
      std::ostringstream msg;
      msg << "cost row " << i << " must have b_i + 1 = " << item_budgets[i] + 1
          << " entries, got " << costs[i].size();
      throw AssumptionViolation(AssumptionClause::shape_mismatch, msg.str());
    }
  }
  return Instance(std::move(item_budgets), total_budget, value_cap,
                  std::move(costs), convex);
}

long long Instance::item_budget_sum() const {
  return std::accumulate(item_budgets_.begin(), item_budgets_.end(), 0LL);
}

double Instance::evaluate(EvaluationLedger& ledger, int player,
                          int items) const {
  const double value = peek(player, items);
  ledger.record(player, items, value);
  return value;
}

double Instance::peek(int player, int items) const {
  if (player < 0 || player >= player_count()) {
    std::ostringstream msg;
    msg << "player index " << player << " outside [0, " << player_count()
        << ")";
    throw IndexOutOfRange(msg.str());
  }
  if (items < 0 || items > item_budget(player)) {
    std::ostringstream msg;
    msg << "item count " << items << " outside [0, " << item_budget(player)
        << "] for player " << player;
    throw IndexOutOfRange(msg.str());
  }
  return costs_[static_cast<std::size_t>(player)]
               [static_cast<std::size_t>(items)];
}

Instance create_instance(std::vector<int> item_budgets, int total_budget,
                         double value_cap,
                         std::vector<std::vector<double>> costs, bool convex) {
  if (total_budget < 1) {
    throw AssumptionViolation(AssumptionClause::shape_mismatch,
                              "total budget must be positive");
  }
  if (value_cap < 0.0) {
    throw AssumptionViolation(AssumptionClause::shape_mismatch,
                              "value cap M must be non-negative");
  }
  Instance instance = Instance::unchecked(std::move(item_budgets), total_budget,
                                          value_cap, std::move(costs), convex);

  if (instance.item_budget_sum() <= instance.total_budget()) {
    std::ostringstream msg;
    msg << "sum(b) = " << instance.item_budget_sum()
        << " <= B = " << instance.total_budget();
    throw AssumptionViolation(AssumptionClause::total_budget_not_binding,
                              msg.str());
  }
  for (int i = 0; i < instance.player_count(); ++i) {
    if (instance.item_budget(i) > instance.total_budget()) {
      std::ostringstream msg;
      msg << "b_" << i << " = " << instance.item_budget(i)
          << " > B = " << instance.total_budget();
      throw AssumptionViolation(
          AssumptionClause::individual_budget_exceeds_total, msg.str());
    }
  }
  for (int i = 0; i < instance.player_count(); ++i) {
    for (int k = 0; k <= instance.item_budget(i); ++k) {
      const double v = instance.peek(i, k);
      if (!(v >= 0.0) || !(v <= instance.value_cap())) {
        std::ostringstream msg;
        msg << "f_" << i << "(" << k << ") = " << v << " outside [0, "
            << instance.value_cap() << "]";
        throw AssumptionViolation(AssumptionClause::value_out_of_range,
                                  msg.str());
      }
      if (k > 0 && instance.peek(i, k) > instance.peek(i, k - 1)) {
        std::ostringstream msg;
        msg << "f_" << i << "(" << k << ") > f_" << i << "(" << k - 1 << ")";
        throw AssumptionViolation(AssumptionClause::row_not_monotone,
                                  msg.str());
      }
    }
    if (instance.convex_flagged()) {
      for (int k = 0; k + 2 <= instance.item_budget(i); ++k) {
        const double d0 = instance.peek(i, k + 1) - instance.peek(i, k);
        const double d1 = instance.peek(i, k + 2) - instance.peek(i, k + 1);
        if (d1 < d0) {
          std::ostringstream msg;
          msg << "row " << i << " differences decrease at k = " << k;
          throw AssumptionViolation(AssumptionClause::row_not_convex,
                                    msg.str());
        }
      }
    }
  }
  return instance;
}

}  // namespace ralloc
