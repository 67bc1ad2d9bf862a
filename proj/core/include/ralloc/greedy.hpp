#pragma once

#include <optional>

#include "ralloc/bounds.hpp"
#include "ralloc/instance.hpp"
#include "ralloc/ledger.hpp"
#include "ralloc/report.hpp"

namespace ralloc {

/// G_i(k) = f_i(k) - f_i(k+1), the gain of one extra item. Both points must
/// be evaluated and k+1 must lie in the domain; MissingValue otherwise.
double immediate_gain(const EvaluationLedger& ledger, int player, int items);

/// s_i(k) = max{G_i(k), A_i(k)} with the conservative average gain
/// A_i(k) = (f_i(k) - u_i(beta)) / (beta - k) over the reachable horizon
/// beta = min{b_i, k + B - t}. When the horizon is empty (beta = k) the
/// score falls back to the immediate gain.
double prescient_score(const Instance& instance, const EvaluationLedger& ledger,
                       const BoundModel& bounds, int player, int items,
                       int iteration);

/// Greedy benchmark: repeatedly give an item to the player with the largest
/// immediate gain (additive form when 2B <= sum(b), otherwise starts full and
/// removes the cheapest item until feasible). Exact on convex rows.
SolveReport run_myopic(const Instance& instance, EvaluationLedger& ledger,
                       std::optional<int> max_iters = {});

struct PrescientOptions {
  BoundMode bound_mode = BoundMode::monotone;
  std::optional<int> max_iters;
};

/// Like run_myopic but scores players by s_i, looking ahead over the
/// remaining horizon through the bound model. Exact on convex rows.
SolveReport run_prescient(const Instance& instance, EvaluationLedger& ledger,
                          const PrescientOptions& options = {});

}  // namespace ralloc
