#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ralloc/instance.hpp"

namespace ralloc {

enum class Family { convex, monotone, near_convex };

const char* to_string(Family family);
Family family_from_string(const std::string& name);  // SpecInvalid on unknown

/// Parameters for the seeded instance generator.
struct GenSpec {
  Family family = Family::convex;
  int players = 0;
  std::vector<int> item_budgets;  // one entry, replicated, or one per player
  int total_budget = 0;
  double value_cap = 100.0;
  std::uint64_t seed = 0;
  double perturbation = 0.1;  // near_convex only, in [0, 1]
};

/// Deterministic per seed. Convex rows come from descending marginal drops,
/// monotone rows from unsorted drops, near-convex rows from convex rows with
/// per-drop perturbation factors in [1-p, 1+p]. All values are quantized to
/// multiples of 1/4096 so that desk-scale objective sums are exact in double
/// arithmetic. The result always passes create_instance validation; invalid
/// specs raise SpecInvalid.
Instance generate(const GenSpec& spec);

}  // namespace ralloc
