#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ralloc/instance.hpp"
#include "ralloc/ledger.hpp"
#include "support.hpp"

using namespace ralloc;

TEST_CASE("create_instance accepts a valid instance") {
  const Instance e1 = testsup::e1();
  CHECK(e1.player_count() == 2);
  CHECK(e1.total_budget() == 3);
  CHECK(e1.value_cap() == 100.0);
  CHECK(e1.item_budget_sum() == 6);
  CHECK_FALSE(e1.convex_flagged());
}

TEST_CASE("create_instance rejects a non-binding total budget") {
  try {
    create_instance({2, 2}, 5, 100.0, {{3, 2, 1}, {3, 2, 1}});
    FAIL("expected AssumptionViolation");
  } catch (const AssumptionViolation& e) {
    CHECK(e.clause() == AssumptionClause::total_budget_not_binding);
  }
}

TEST_CASE("create_instance rejects an individual budget above B") {
  try {
    create_instance({4, 1}, 3, 100.0, {{5, 4, 3, 2, 1}, {5, 4}});
    FAIL("expected AssumptionViolation");
  } catch (const AssumptionViolation& e) {
    CHECK(e.clause() == AssumptionClause::individual_budget_exceeds_total);
  }
}

TEST_CASE("create_instance rejects a non-monotone row") {
  try {
    create_instance({2, 2}, 2, 100.0, {{5, 6, 4}, {3, 2, 1}});
    FAIL("expected AssumptionViolation");
  } catch (const AssumptionViolation& e) {
    CHECK(e.clause() == AssumptionClause::row_not_monotone);
  }
}

TEST_CASE("create_instance rejects values outside [0, M]") {
  try {
    create_instance({2, 2}, 2, 4.0, {{5, 2, 1}, {3, 2, 1}});
    FAIL("expected AssumptionViolation");
  } catch (const AssumptionViolation& e) {
    CHECK(e.clause() == AssumptionClause::value_out_of_range);
  }
}

TEST_CASE("create_instance checks the convexity flag") {
  try {
    create_instance({3, 3}, 3, 100.0, {{10, 6, 3, 1}, {8, 7, 2, 2}}, true);
    FAIL("expected AssumptionViolation");
  } catch (const AssumptionViolation& e) {
    CHECK(e.clause() == AssumptionClause::row_not_convex);
  }
}

TEST_CASE("create_instance rejects inconsistent shapes") {
  CHECK_THROWS_AS(create_instance({2, 2}, 2, 100.0, {{3, 2}, {3, 2, 1}}),
                  AssumptionViolation);
  CHECK_THROWS_AS(create_instance({}, 2, 100.0, {}), AssumptionViolation);
  CHECK_THROWS_AS(create_instance({2, 0}, 2, 100.0, {{3, 2, 1}, {1}}),
                  AssumptionViolation);
}

TEST_CASE("evaluate_point counts distinct points once") {
  const Instance e1 = testsup::e1();
  EvaluationLedger ledger(e1);
  CHECK(ledger.eval_count() == 0);

  CHECK(e1.evaluate(ledger, 0, 2) == 3.0);
  CHECK(ledger.eval_count() == 1);
  CHECK(ledger.evaluated(0, 2));
  CHECK(ledger.value(0, 2) == 3.0);

  CHECK(e1.evaluate(ledger, 0, 2) == 3.0);  // cache hit
  CHECK(ledger.eval_count() == 1);

  CHECK_THROWS_AS(e1.evaluate(ledger, 0, 4), IndexOutOfRange);
  CHECK_THROWS_AS(e1.evaluate(ledger, 2, 0), IndexOutOfRange);
}

TEST_CASE("oracle is deterministic and the ledger immutable") {
  const Instance e1 = testsup::e1();
  EvaluationLedger ledger(e1);
  const double first = e1.evaluate(ledger, 1, 1);
  const double second = e1.evaluate(ledger, 1, 1);
  CHECK(first == second);
  CHECK(ledger.value(1, 1) == first);
  CHECK_THROWS_AS(ledger.value(1, 2), MissingValue);
  CHECK_FALSE(ledger.try_value(1, 2).has_value());
}

TEST_CASE("eval_count matches a recount of V") {
  const Instance e1 = testsup::e1();
  EvaluationLedger ledger(e1);
  std::mt19937_64 rng(11);
  testsup::evaluate_random_subset(e1, ledger, rng, 0.6);
  CHECK(ledger.eval_count() == testsup::recount(e1, ledger));

  testsup::evaluate_all(e1, ledger);
  CHECK(ledger.eval_count() ==
        e1.item_budget_sum() + e1.player_count());  // enumeration ceiling
}

TEST_CASE("per-player counts track evaluated rows") {
  const Instance e1 = testsup::e1();
  EvaluationLedger ledger(e1);
  e1.evaluate(ledger, 0, 0);
  e1.evaluate(ledger, 0, 1);
  e1.evaluate(ledger, 1, 3);
  CHECK(ledger.per_player_count()[0] == 2);
  CHECK(ledger.per_player_count()[1] == 1);
  const auto points = ledger.evaluated_points(0);
  REQUIRE(points.size() == 2);
  CHECK(points[0].first == 0);
  CHECK(points[1].first == 1);
}

TEST_CASE("objective_value sums per-player values") {
  const Instance e1 = testsup::e1();
  const Allocation x({1, 2});
  CHECK(testsup::true_objective(e1, x) == 8.0);

  const Allocation zeros({0, 0});
  CHECK(testsup::true_objective(e1, zeros) == 18.0);  // sum of f_i(0)
}

TEST_CASE("objective_value over a ledger requires evaluated points") {
  const Instance e1 = testsup::e1();
  EvaluationLedger ledger(e1);
  e1.evaluate(ledger, 0, 2);
  CHECK_THROWS_AS(objective_value(Allocation({2, 1}), ledger), MissingValue);
  e1.evaluate(ledger, 1, 1);
  CHECK(objective_value(Allocation({2, 1}), ledger) == 10.0);
}

TEST_CASE("allocation feasibility") {
  const Instance e1 = testsup::e1();
  CHECK(Allocation({1, 2}).feasible(e1));
  CHECK(Allocation({3, 0}).feasible(e1));
  CHECK_FALSE(Allocation({2, 2}).feasible(e1));  // sums to 4
  CHECK_FALSE(Allocation({4, -1}).fits(e1));
  CHECK_FALSE(Allocation({3}).fits(e1));
}

TEST_CASE("unchecked factory skips assumptions but not shapes") {
  const Instance single = Instance::unchecked({4}, 3, 100.0, {{9, 7, 4, 2, 1}});
  CHECK(single.player_count() == 1);
  CHECK(single.peek(0, 4) == 1.0);
  CHECK_THROWS_AS(Instance::unchecked({4}, 3, 100.0, {{9, 7}}),
                  AssumptionViolation);
}
