#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ralloc/instance.hpp"

namespace ralloc {

/// Bound matrices captured for one trace entry (verbose runs only).
struct BoundSnapshot {
  std::vector<std::vector<double>> lower;
  std::vector<std::vector<double>> upper;
};

struct TraceEntry {
  int iteration = 0;
  Allocation allocation;
  double lower = 0.0;
  double upper = 0.0;
  long long evals = 0;
  /// z*(u^t) under SW-R, recorded for inspection only.
  std::optional<double> upper_model_optimum;
  std::optional<BoundSnapshot> bounds;
};

/// Outcome of one method run: final allocation, objective interval,
/// evaluation count and per-iteration trace.
struct SolveReport {
  std::string method;
  /// Constructive methods record their budget-regime dispatch here
  /// ("additive" or "removal"); empty for the other methods.
  std::string variant;
  Allocation allocation;
  double objective_lower = 0.0;
  double objective_upper = 0.0;
  /// Present when every (i, x_i) point is evaluated.
  std::optional<double> true_objective;
  long long evals = 0;
  int iterations = 0;
  std::vector<TraceEntry> trace;
  bool terminated_early = false;
  /// Convex bounds were forced onto a non-convex-flagged instance.
  bool heuristic_bounds = false;
};

}  // namespace ralloc
