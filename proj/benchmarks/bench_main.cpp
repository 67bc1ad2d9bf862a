#include <benchmark/benchmark.h>

#include "ralloc/bounds.hpp"
#include "ralloc/instance_gen.hpp"
#include "ralloc/ledger.hpp"
#include "ralloc/one_opt.hpp"
#include "ralloc/sandwich.hpp"
#include "ralloc/subsolver.hpp"

namespace {

ralloc::Instance make_instance(ralloc::Family family, int players, int budget,
                               std::uint64_t seed) {
  ralloc::GenSpec spec;
  spec.family = family;
  spec.players = players;
  spec.item_budgets = {budget};
  spec.total_budget = players * budget / 3;
  spec.seed = seed;
  return ralloc::generate(spec);
}

ralloc::EvaluationLedger half_evaluated(const ralloc::Instance& instance) {
  ralloc::EvaluationLedger ledger(instance);
  for (int i = 0; i < instance.player_count(); ++i) {
    for (int k = 0; k <= instance.item_budget(i); k += 2) {
      instance.evaluate(ledger, i, k);
    }
  }
  return ledger;
}

void BM_MonotoneBounds(benchmark::State& state) {
  const auto instance = make_instance(ralloc::Family::monotone,
                                      static_cast<int>(state.range(0)),
                                      static_cast<int>(state.range(1)), 7);
  const auto ledger = half_evaluated(instance);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ralloc::monotone_bounds(instance, ledger));
  }
}
BENCHMARK(BM_MonotoneBounds)->Args({10, 25})->Args({25, 50});

void BM_ConvexBounds(benchmark::State& state) {
  const auto instance = make_instance(ralloc::Family::convex,
                                      static_cast<int>(state.range(0)),
                                      static_cast<int>(state.range(1)), 7);
  const auto ledger = half_evaluated(instance);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ralloc::convex_bounds(instance, ledger));
  }
}
BENCHMARK(BM_ConvexBounds)->Args({10, 25})->Args({25, 50});

void BM_SolveMenu(benchmark::State& state) {
  const auto instance = make_instance(ralloc::Family::monotone,
                                      static_cast<int>(state.range(0)),
                                      static_cast<int>(state.range(1)), 7);
  ralloc::EvaluationLedger ledger(instance);
  for (int i = 0; i < instance.player_count(); ++i) {
    for (int k = 0; k <= instance.item_budget(i); ++k) {
      instance.evaluate(ledger, i, k);
    }
  }
  const auto menu = ralloc::PointMenu::from_ledger(instance, ledger);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ralloc::solve_menu(menu, instance.total_budget()));
  }
}
BENCHMARK(BM_SolveMenu)->Args({10, 25})->Args({25, 50})->Args({50, 100});

void BM_OneOpt(benchmark::State& state) {
  const auto instance = make_instance(ralloc::Family::convex,
                                      static_cast<int>(state.range(0)),
                                      static_cast<int>(state.range(1)), 11);
  for (auto _ : state) {
    ralloc::EvaluationLedger ledger(instance);
    benchmark::DoNotOptimize(ralloc::run_one_opt(
        instance, ledger, {ralloc::BoundMode::convex, {}, false}));
  }
}
BENCHMARK(BM_OneOpt)->Args({10, 25})->Args({25, 50});

void BM_SandwichRestricted(benchmark::State& state) {
  const auto instance = make_instance(ralloc::Family::monotone,
                                      static_cast<int>(state.range(0)),
                                      static_cast<int>(state.range(1)), 11);
  for (auto _ : state) {
    ralloc::EvaluationLedger ledger(instance);
    ralloc::SandwichOptions options;
    options.rule = ralloc::DecisionRule::max_gap_restricted;
    benchmark::DoNotOptimize(ralloc::run_sandwich(instance, ledger, options));
  }
}
BENCHMARK(BM_SandwichRestricted)->Args({10, 25})->Args({25, 50});

}  // namespace

BENCHMARK_MAIN();
