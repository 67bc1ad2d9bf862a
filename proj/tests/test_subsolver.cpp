#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "ralloc/subsolver.hpp"
#include "support.hpp"

using namespace ralloc;

namespace {

PointMenu full_menu(const Instance& instance) {
  PointMenu menu(instance.player_count());
  for (int i = 0; i < instance.player_count(); ++i) {
    for (int k = 0; k <= instance.item_budget(i); ++k) {
      menu.add(i, k, instance.peek(i, k));
    }
  }
  return menu;
}

}  // namespace

TEST_CASE("solve_menu finds the optimum of the full menu") {
  const Instance e1 = testsup::e1();
  const SubSolution sol = solve_menu(full_menu(e1), 3);
  CHECK(sol.feasible);
  CHECK(sol.allocation == Allocation({1, 2}));
  CHECK(sol.value == 8.0);
}

TEST_CASE("solve_menu on a restricted menu") {
  PointMenu menu(2);
  menu.add(0, 2, 3.0);
  menu.add(1, 1, 7.0);
  const SubSolution sol = solve_menu(menu, 3);
  CHECK(sol.feasible);
  CHECK(sol.allocation == Allocation({2, 1}));
  CHECK(sol.value == 10.0);
}

TEST_CASE("solve_menu reports infeasibility as a result") {
  PointMenu menu(2);
  menu.add(0, 0, 5.0);
  menu.add(1, 0, 7.0);
  const SubSolution sol = solve_menu(menu, 1);
  CHECK_FALSE(sol.feasible);
}

TEST_CASE("solve_menu breaks value ties lexicographically") {
  PointMenu menu(2);
  menu.add(0, 0, 5.0);
  menu.add(0, 1, 5.0);
  menu.add(1, 0, 5.0);
  menu.add(1, 1, 5.0);
  const SubSolution sol = solve_menu(menu, 1);
  CHECK(sol.allocation == Allocation({0, 1}));
}

TEST_CASE("menu points must be distinct and finite") {
  PointMenu menu(1);
  menu.add(0, 1, 2.0);
  CHECK_THROWS_AS(menu.add(0, 1, 3.0), Error);
  CHECK_THROWS_AS(menu.add(0, 2, std::numeric_limits<double>::infinity()),
                  Error);
  CHECK_THROWS_AS(menu.add(1, 0, 1.0), IndexOutOfRange);
}

TEST_CASE("brute force matches the frozen optimum") {
  const SubSolution sol = brute_force_solve(testsup::e1());
  CHECK(sol.feasible);
  CHECK(sol.allocation == Allocation({1, 2}));
  CHECK(sol.value == 8.0);
}

TEST_CASE("brute force with a single player") {
  const Instance single = Instance::unchecked({4}, 3, 100.0, {{9, 7, 4, 2, 1}});
  const SubSolution sol = brute_force_solve(single);
  CHECK(sol.allocation == Allocation({3}));
  CHECK(sol.value == 2.0);
}

TEST_CASE("brute force honors the lattice cap") {
  CHECK_THROWS_AS(brute_force_solve(testsup::e1(), 10), CapExceeded);
}

TEST_CASE("dynamic program and brute force agree") {
  for (int round = 0; round < 60; ++round) {
    const auto family = round % 2 == 0 ? Family::convex : Family::monotone;
    auto spec = testsup::make_spec(family, 2 + round % 4, 3 + round % 6, 0,
                                   4000 + round);
    const long long total = static_cast<long long>(spec.players) *
                            spec.item_budgets[0];
    spec.total_budget = static_cast<int>(
        std::max<long long>(spec.item_budgets[0],
                            round % 3 == 0 ? total / 4 : (3 * total) / 4));
    if (spec.total_budget >= total) spec.total_budget = static_cast<int>(total) - 1;
    const Instance inst = generate(spec);

    const SubSolution via_menu = solve_menu(full_menu(inst), inst.total_budget());
    const SubSolution via_enumeration = brute_force_solve(inst);
    CHECK(via_menu.feasible);
    CHECK(via_enumeration.feasible);
    CHECK(via_menu.value == via_enumeration.value);
    CHECK(via_menu.allocation == via_enumeration.allocation);
  }
}

TEST_CASE("menu optimum certifies random feasible selections") {
  std::mt19937_64 rng(31);
  auto spec = testsup::make_spec(Family::monotone, 4, 6, 10, 777);
  const Instance inst = generate(spec);
  const SubSolution opt = solve_menu(full_menu(inst), inst.total_budget());
  for (int trial = 0; trial < 200; ++trial) {
    // random feasible allocation by bounded sampling
    Allocation x(std::vector<int>(4, 0));
    int remaining = inst.total_budget();
    for (int i = 0; i < 4; ++i) {
      const int tail = (3 - i) * 6;
      const int low = std::max(0, remaining - tail);
      const int high = std::min(6, remaining);
      x.items[static_cast<std::size_t>(i)] =
          low + static_cast<int>(rng() % static_cast<std::uint64_t>(high - low + 1));
      remaining -= x[i];
    }
    CHECK(testsup::true_objective(inst, x) >= opt.value);
  }
}

TEST_CASE("enlarging a menu never increases the optimal value") {
  std::mt19937_64 rng(32);
  const Instance inst = generate(testsup::make_spec(Family::monotone, 3, 8, 12, 55));
  for (int trial = 0; trial < 40; ++trial) {
    PointMenu small(3);
    PointMenu large(3);
    for (int i = 0; i < 3; ++i) {
      for (int k = 0; k <= 8; ++k) {
        const bool in_small = (rng() & 3) == 0;
        const bool in_large = in_small || (rng() & 1) == 0;
        if (in_small) small.add(i, k, inst.peek(i, k));
        if (in_large) large.add(i, k, inst.peek(i, k));
      }
    }
    const SubSolution s = solve_menu(small, inst.total_budget());
    const SubSolution l = solve_menu(large, inst.total_budget());
    if (s.feasible) {
      CHECK(l.feasible);
      CHECK(l.value <= s.value);
    }
  }
}

TEST_CASE("LP export of a restricted menu") {
  PointMenu menu(2);
  menu.add(0, 2, 3.0);
  menu.add(1, 1, 7.0);
  const std::string lp = export_ilp(menu, 3);
  CHECK(lp.find("Minimize") != std::string::npos);
  CHECK(lp.find("3 y_0_2 + 7 y_1_1") != std::string::npos);
  CHECK(lp.find("budget: 2 y_0_2 + 1 y_1_1 = 3") != std::string::npos);
  CHECK(lp.find("choose_0: y_0_2 = 1") != std::string::npos);
  CHECK(lp.find("choose_1: y_1_1 = 1") != std::string::npos);
  CHECK(lp.find("Binary") != std::string::npos);
  CHECK(lp.find("End") != std::string::npos);
}

TEST_CASE("LP export of the full menu transcribes the cost table") {
  const Instance e1 = testsup::e1();
  const std::string lp = export_ilp(full_menu(e1), 3);
  int binaries = 0;
  for (std::size_t pos = lp.find("Binary");
       (pos = lp.find("\n y_", pos + 1)) != std::string::npos;) {
    ++binaries;
  }
  CHECK(binaries == 8);
  CHECK(lp.find("10 y_0_0") != std::string::npos);
  CHECK(lp.find("6 y_0_1") != std::string::npos);
  CHECK(lp.find("2 y_1_2") != std::string::npos);
  // k = 0 points carry no budget coefficient
  const std::size_t budget_pos = lp.find("budget:");
  const std::size_t budget_end = lp.find('\n', budget_pos);
  CHECK(lp.substr(budget_pos, budget_end - budget_pos).find("y_0_0") ==
        std::string::npos);
}

TEST_CASE("LP export emits degenerate one-choice rows") {
  PointMenu menu(2);
  menu.add(0, 1, 4.0);
  const std::string lp = export_ilp(menu, 1);
  CHECK(lp.find("choose_1: 0 = 1") != std::string::npos);
}
