#pragma once

#include "ralloc/bounds.hpp"
#include "ralloc/instance.hpp"
#include "ralloc/ledger.hpp"
#include "ralloc/report.hpp"

namespace ralloc::detail {

inline bool allocation_evaluated(const EvaluationLedger& ledger,
                                 const Allocation& x) {
  for (int i = 0; i < x.size(); ++i) {
    if (!ledger.evaluated(i, x[i])) return false;
  }
  return true;
}

// Final objective fields: the exact value when every chosen point is
// evaluated, otherwise a monotone-bound interval from the current ledger.
inline void finalize_objective(const Instance& instance,
                               const EvaluationLedger& ledger,
                               const Allocation& x, SolveReport& report) {
  report.allocation = x;
  if (allocation_evaluated(ledger, x)) {
    const double z = objective_value(x, ledger);
    report.true_objective = z;
    report.objective_lower = z;
    report.objective_upper = z;
  } else {
    const BoundModel bounds = monotone_bounds(instance, ledger);
    report.objective_lower = model_bound_objective(bounds, x, BoundSide::lower);
    report.objective_upper = model_bound_objective(bounds, x, BoundSide::upper);
  }
  report.evals = ledger.eval_count();
}

}  // namespace ralloc::detail
