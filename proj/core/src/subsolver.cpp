#include "ralloc/subsolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ralloc/format.hpp"

namespace ralloc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

PointMenu::PointMenu(int players)
    : rows_(static_cast<std::size_t>(players)) {}

void PointMenu::add(int player, int items, double value) {
  if (player < 0 || player >= player_count() || items < 0) {
    throw IndexOutOfRange("menu point outside the player range");
  }
  if (!std::isfinite(value)) {
    throw Error("menu values must be finite");
  }
  auto& row = rows_[static_cast<std::size_t>(player)];
  auto pos = std::lower_bound(
      row.begin(), row.end(), items,
      [](const MenuEntry& e, int k) { return e.items < k; });
  if (pos != row.end() && pos->items == items) {
    throw Error("duplicate menu point");
  }
  row.insert(pos, MenuEntry{items, value});
}

PointMenu PointMenu::from_ledger(const Instance& instance,
                                 const EvaluationLedger& ledger) {
  PointMenu menu(instance.player_count());
  for (int i = 0; i < instance.player_count(); ++i) {
    for (const auto& [k, v] : ledger.evaluated_points(i)) {
      menu.add(i, k, v);
    }
  }
  return menu;
}

PointMenu PointMenu::from_bounds(const BoundModel& model, BoundSide side) {
  PointMenu menu(model.player_count());
  for (int i = 0; i < model.player_count(); ++i) {
    for (int k = 0; k < model.row_size(i); ++k) {
      menu.add(i, k,
               side == BoundSide::lower ? model.lower(i, k) : model.upper(i, k));
    }
  }
  return menu;
}

SubSolution solve_menu(const PointMenu& menu, int total_budget) {
  const int n = menu.player_count();
  const int budget = std::max(total_budget, 0);

  // suffix[i][s]: cheapest way for players i..n-1 to spend exactly s items.
  std::vector<std::vector<double>> suffix(
      static_cast<std::size_t>(n) + 1,
      std::vector<double>(static_cast<std::size_t>(budget) + 1, kInf));
  suffix[static_cast<std::size_t>(n)][0] = 0.0;

  for (int i = n - 1; i >= 0; --i) {
    auto& cur = suffix[static_cast<std::size_t>(i)];
    const auto& next = suffix[static_cast<std::size_t>(i) + 1];
    for (int s = 0; s <= budget; ++s) {
      double best = kInf;
      for (const MenuEntry& e : menu.row(i)) {
        if (e.items > s) break;  // rows are sorted by item count
        const double cand =
            e.value + next[static_cast<std::size_t>(s - e.items)];
        if (cand < best) best = cand;
      }
      cur[static_cast<std::size_t>(s)] = best;
    }
  }

  SubSolution sol;
  sol.allocation.items.assign(static_cast<std::size_t>(n), 0);
  const double optimum =
      suffix[0][static_cast<std::size_t>(budget)];
  if (total_budget < 0 || optimum == kInf) {
    sol.value = kInf;
    sol.feasible = false;
    return sol;
  }
  sol.value = optimum;
  sol.feasible = true;

  // Lexicographically smallest optimum: smallest item count first per player.
  int remaining = budget;
  for (int i = 0; i < n; ++i) {
    const auto& next = suffix[static_cast<std::size_t>(i) + 1];
    const double target = suffix[static_cast<std::size_t>(i)]
                                [static_cast<std::size_t>(remaining)];
    for (const MenuEntry& e : menu.row(i)) {
      if (e.items > remaining) break;
      if (e.value + next[static_cast<std::size_t>(remaining - e.items)] ==
          target) {
        sol.allocation.items[static_cast<std::size_t>(i)] = e.items;
        remaining -= e.items;
        break;
      }
    }
  }
  return sol;
}

namespace {

struct BruteForceSearch {
  const Instance& instance;
  std::vector<long long> suffix_capacity;  // sum of b_j for j >= i
  std::vector<int> current;
  std::vector<int> best;
  double best_value = kInf;

  void descend(int player, int remaining) {
    const int n = instance.player_count();
    if (player == n) {
      double value = 0.0;
      for (int j = n - 1; j >= 0; --j) {
        value = instance.peek(j, current[static_cast<std::size_t>(j)]) + value;
      }
      if (value < best_value) {  // ascending visit keeps the lexicographic min
        best_value = value;
        best = current;
      }
      return;
    }
    const long long tail = suffix_capacity[static_cast<std::size_t>(player) + 1];
    const int low = static_cast<int>(
        std::max<long long>(0, static_cast<long long>(remaining) - tail));
    const int high = std::min(instance.item_budget(player), remaining);
    for (int k = low; k <= high; ++k) {
      current[static_cast<std::size_t>(player)] = k;
      descend(player + 1, remaining - k);
    }
  }
};

}  // namespace

SubSolution brute_force_solve(const Instance& instance, long long cap) {
  long long lattice = 1;
  for (int i = 0; i < instance.player_count(); ++i) {
    lattice *= instance.item_budget(i) + 1;
    if (lattice > cap) {
      std::ostringstream msg;
      msg << "lattice has more than " << cap << " points";
      throw CapExceeded(msg.str());
    }
  }

  const int n = instance.player_count();
  BruteForceSearch search{instance, {}, {}, {}, kInf};
  search.suffix_capacity.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    search.suffix_capacity[static_cast<std::size_t>(i)] =
        search.suffix_capacity[static_cast<std::size_t>(i) + 1] +
        instance.item_budget(i);
  }
  search.current.assign(static_cast<std::size_t>(n), 0);
  search.descend(0, instance.total_budget());

  SubSolution sol;
  if (search.best_value == kInf) {
    sol.allocation.items.assign(static_cast<std::size_t>(n), 0);
    sol.value = kInf;
    sol.feasible = false;
    return sol;
  }
  sol.allocation.items = search.best;
  sol.value = search.best_value;
  sol.feasible = true;
  return sol;
}

std::string export_ilp(const PointMenu& menu, int total_budget) {
  std::ostringstream out;
  out << "\\ separable resource allocation over admissible points\n";
  out << "Minimize\n obj:";
  bool first = true;
  for (int i = 0; i < menu.player_count(); ++i) {
    for (const MenuEntry& e : menu.row(i)) {
      out << (first ? " " : " + ") << format_number(e.value) << " y_" << i
          << "_" << e.items;
      first = false;
    }
  }
  if (first) out << " 0";
  out << "\nSubject To\n budget:";
  first = true;
  for (int i = 0; i < menu.player_count(); ++i) {
    for (const MenuEntry& e : menu.row(i)) {
      if (e.items == 0) continue;
      out << (first ? " " : " + ") << e.items << " y_" << i << "_" << e.items;
      first = false;
    }
  }
  if (first) out << " 0";
  out << " = " << total_budget << "\n";
  for (int i = 0; i < menu.player_count(); ++i) {
    out << " choose_" << i << ":";
    first = true;
    for (const MenuEntry& e : menu.row(i)) {
      out << (first ? " " : " + ") << "y_" << i << "_" << e.items;
      first = false;
    }
    if (first) out << " 0";  // empty row: infeasible constant, emitted anyway
    out << " = 1\n";
  }
  out << "Binary\n";
  for (int i = 0; i < menu.player_count(); ++i) {
    for (const MenuEntry& e : menu.row(i)) {
      out << " y_" << i << "_" << e.items << "\n";
    }
  }
  out << "End\n";
  return out.str();
}

}  // namespace ralloc
