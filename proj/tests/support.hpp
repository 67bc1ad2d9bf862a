#pragma once

// Shared fixtures and helpers for the test suites.

#include <random>
#include <vector>

#include "ralloc/instance.hpp"
#include "ralloc/instance_gen.hpp"
#include "ralloc/ledger.hpp"

namespace testsup {

// Two players, B = 3; the second row is non-convex. Greedy settles on
// (3, 0) with value 9 while the optimum is (1, 2) with value 8.
inline ralloc::Instance e1() {
  return ralloc::create_instance({3, 3}, 3, 100.0,
                                 {{10, 6, 3, 1}, {8, 7, 2, 2}});
}

// Flat-then-drop second row: immediate gains mislead the myopic method
// (18) while the horizon score finds the optimum (14).
inline ralloc::Instance e2() {
  return ralloc::create_instance({2, 2}, 2, 100.0,
                                 {{10, 9, 8}, {10, 10, 4}});
}

// Convex rows on which the 1-opt selection rule deadlocks right after
// initialization (every best-case gain is -inf while d = 2).
inline ralloc::Instance e3() {
  return ralloc::create_instance({3, 3}, 3, 100.0,
                                 {{10, 6, 3, 1}, {9, 5, 4, 3.5}}, true);
}

// Convex rows in the removal budget regime (2B > sum(b)).
inline ralloc::Instance e4() {
  return ralloc::create_instance({3, 3}, 4, 100.0,
                                 {{10, 6, 3, 1}, {9, 8, 7.5, 7.2}}, true);
}

inline void evaluate_all(const ralloc::Instance& instance,
                         ralloc::EvaluationLedger& ledger) {
  for (int i = 0; i < instance.player_count(); ++i) {
    for (int k = 0; k <= instance.item_budget(i); ++k) {
      instance.evaluate(ledger, i, k);
    }
  }
}

// Distinct true entries of V, recounted from scratch.
inline long long recount(const ralloc::Instance& instance,
                         const ralloc::EvaluationLedger& ledger) {
  long long count = 0;
  for (int i = 0; i < instance.player_count(); ++i) {
    for (int k = 0; k <= instance.item_budget(i); ++k) {
      if (ledger.evaluated(i, k)) ++count;
    }
  }
  return count;
}

// Evaluates each point independently with probability `density`.
inline void evaluate_random_subset(const ralloc::Instance& instance,
                                   ralloc::EvaluationLedger& ledger,
                                   std::mt19937_64& rng, double density) {
  for (int i = 0; i < instance.player_count(); ++i) {
    for (int k = 0; k <= instance.item_budget(i); ++k) {
      const double draw =
          static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < density) instance.evaluate(ledger, i, k);
    }
  }
}

inline ralloc::GenSpec make_spec(ralloc::Family family, int players, int budget,
                                 int total_budget, std::uint64_t seed,
                                 double perturbation = 0.1) {
  ralloc::GenSpec spec;
  spec.family = family;
  spec.players = players;
  spec.item_budgets = {budget};
  spec.total_budget = total_budget;
  spec.value_cap = 100.0;
  spec.seed = seed;
  spec.perturbation = perturbation;
  return spec;
}

// True objective read straight from the cost table.
inline double true_objective(const ralloc::Instance& instance,
                             const ralloc::Allocation& x) {
  return ralloc::objective_value(
      x, [&instance](int i, int k) { return instance.peek(i, k); });
}

}  // namespace testsup
