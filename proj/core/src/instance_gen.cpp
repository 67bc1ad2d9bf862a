#include "ralloc/instance_gen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace ralloc {

namespace {

// Cost values live on this grid so that desk-scale sums are exact doubles.
constexpr double kGrid = 4096.0;

double quantize(double v) { return std::round(v * kGrid) / kGrid; }

// Uniform double in [0, 1) from the top 53 bits; avoids the
// implementation-defined std::uniform_real_distribution.
double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

const char* to_string(Family family) {
  switch (family) {
    case Family::convex:
      return "convex";
    case Family::monotone:
      return "monotone";
    case Family::near_convex:
      return "near_convex";
  }
  return "unknown";
}

Family family_from_string(const std::string& name) {
  if (name == "convex") return Family::convex;
  if (name == "monotone") return Family::monotone;
  if (name == "near_convex" || name == "near-convex") return Family::near_convex;
  throw SpecInvalid("unknown family '" + name +
                    "' (convex, monotone, near_convex)");
}

Instance generate(const GenSpec& spec) {
  if (spec.players < 1) throw SpecInvalid("need at least one player");
  std::vector<int> budgets = spec.item_budgets;
  if (budgets.size() == 1) {
    budgets.assign(static_cast<std::size_t>(spec.players), budgets.front());
  }
  if (budgets.size() != static_cast<std::size_t>(spec.players)) {
    throw SpecInvalid("item budgets must be a single value or one per player");
  }
  long long budget_sum = 0;
  int budget_max = 0;
  for (int b : budgets) {
    if (b < 1) throw SpecInvalid("item budgets must be positive");
    budget_sum += b;
    budget_max = std::max(budget_max, b);
  }
  if (spec.total_budget < budget_max || spec.total_budget >= budget_sum) {
    std::ostringstream msg;
    msg << "total budget must satisfy max(b) <= B < sum(b), got B = "
        << spec.total_budget << " with max(b) = " << budget_max
        << ", sum(b) = " << budget_sum;
    throw SpecInvalid(msg.str());
  }
  if (!(spec.value_cap > 0.0)) throw SpecInvalid("value cap must be positive");
  if (spec.perturbation < 0.0 || spec.perturbation > 1.0) {
    throw SpecInvalid("perturbation must lie in [0, 1]");
  }

  std::mt19937_64 rng(spec.seed);
  const double cap = spec.value_cap;
  const double tick = 1.0 / kGrid;

  const double start_hi = std::floor(cap * kGrid) / kGrid;
  const double start_lo = std::floor(0.5 * cap * kGrid) / kGrid + tick;
  if (start_lo > start_hi) {
    throw SpecInvalid("value cap too small for the value grid");
  }

  std::vector<std::vector<double>> costs;
  costs.reserve(budgets.size());
  for (int b : budgets) {
    const double start = std::clamp(
        quantize(cap * (0.5 + 0.5 * uniform_unit(rng))), start_lo, start_hi);

    std::vector<double> drops(static_cast<std::size_t>(b));
    const double scale = 2.0 * start / static_cast<double>(b);
    for (double& d : drops) {
      d = std::max(tick, quantize(uniform_unit(rng) * scale));
    }
    if (spec.family != Family::monotone) {
      std::sort(drops.begin(), drops.end(), std::greater<double>());
    }
    if (spec.family == Family::near_convex) {
      for (double& d : drops) {
        const double factor =
            1.0 - spec.perturbation + 2.0 * spec.perturbation * uniform_unit(rng);
        d = std::max(tick, quantize(d * factor));
      }
    }

    std::vector<double> row(static_cast<std::size_t>(b) + 1);
    row[0] = start;
    for (int k = 1; k <= b; ++k) {
      row[static_cast<std::size_t>(k)] =
          std::max(0.0, row[static_cast<std::size_t>(k) - 1] -
                            drops[static_cast<std::size_t>(k) - 1]);
    }
    costs.push_back(std::move(row));
  }

  return create_instance(std::move(budgets), spec.total_budget, cap,
                         std::move(costs), spec.family == Family::convex);
}

}  // namespace ralloc
