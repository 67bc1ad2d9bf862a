#pragma once

#include <string>
#include <vector>

#include "ralloc/bounds.hpp"
#include "ralloc/instance.hpp"
#include "ralloc/ledger.hpp"

namespace ralloc {

struct MenuEntry {
  int items;
  double value;
};

/// Per-player sets of admissible (item count, value) pairs. Encodes the
/// evaluated-points restriction of the allocation problem, or a full bound
/// model, as inputs for the exact subsolver.
class PointMenu {
public:
  explicit PointMenu(int players);

  /// Adds one admissible point; item counts must be distinct per player and
  /// values finite.
  void add(int player, int items, double value);

  /// Menu of exactly the evaluated points.
  static PointMenu from_ledger(const Instance& instance,
                               const EvaluationLedger& ledger);
  /// Full-domain menu over one side of a bound model.
  static PointMenu from_bounds(const BoundModel& model, BoundSide side);

  int player_count() const { return static_cast<int>(rows_.size()); }
  /// Entries of one player, ascending in item count.
  const std::vector<MenuEntry>& row(int player) const {
    return rows_[static_cast<std::size_t>(player)];
  }

private:
  std::vector<std::vector<MenuEntry>> rows_;
};

struct SubSolution {
  Allocation allocation;
  double value = 0.0;
  bool feasible = false;
};

/// Exact minimizer of sum_i F_i(x_i) subject to sum_i x_i = B with each
/// (i, x_i) drawn from the menu. Dynamic program over suffix budgets,
/// O(n * B * max row size). Among optimal solutions returns the
/// lexicographically smallest allocation; infeasibility is reported via
/// `feasible`, never thrown.
SubSolution solve_menu(const PointMenu& menu, int total_budget);

inline constexpr long long kDefaultBruteForceCap = 10'000'000;

/// Exhaustive reference solver over the full lattice; reads the cost table
/// directly (non-counting) and serves as the test oracle. Same tie-break as
/// solve_menu. Throws CapExceeded when prod(b_i + 1) > cap.
SubSolution brute_force_solve(const Instance& instance,
                              long long cap = kDefaultBruteForceCap);

/// CPLEX LP format text of the equivalent binary program: one binary y_i_k
/// per menu point, objective sum F_{i,k} y_{i,k}, a budget row
/// sum k y_{i,k} = B and a one-choice row per player.
std::string export_ilp(const PointMenu& menu, int total_budget);

}  // namespace ralloc
