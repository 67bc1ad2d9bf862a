#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ralloc/bounds.hpp"
#include "ralloc/instance.hpp"
#include "ralloc/ledger.hpp"
#include "ralloc/report.hpp"
#include "ralloc/subsolver.hpp"

namespace ralloc {

struct OneOptOptions {
  BoundMode bound_mode = BoundMode::monotone;
  std::optional<int> max_iters;
  bool trace_bounds = false;
};

/// Local-search state: a feasible allocation that is optimal over the
/// evaluated points, per-player marginal bounds theta_i (cost increase of
/// removing an item, bounded below) and eta_i (cost decrease of adding one,
/// bounded above), and the best-case swap margin
///   d = max{eta_j - theta_i : i in S-, j in S+, i != j}.
///
/// Construction evaluates two adjacent points per player around floor(B/n)
/// (clamped to the row, extended until the evaluated points can sum to B)
/// and solves the restricted problem. Each step() evaluates one new point
/// and re-solves; the method has converged once d <= 0.
class OneOptRun {
public:
  OneOptRun(const Instance& instance, EvaluationLedger& ledger,
            BoundMode bound_mode);

  bool done() const { return swap_margin_ <= 0.0; }
  /// One iteration: pick the point with the highest best-case improvement
  /// (or probe the pair attaining d when every gain is -inf), evaluate it,
  /// re-solve the restricted problem and refresh the marginals.
  void step();

  int iteration() const { return iteration_; }
  /// d; -inf when no eligible (i, j) pair exists.
  double swap_margin() const { return swap_margin_; }
  const Allocation& allocation() const { return allocation_; }
  /// Objective of the current allocation; exact, since every point of a
  /// restricted-optimal allocation is evaluated.
  double current_objective() const { return restricted_value_; }
  const BoundModel& bounds() const { return bounds_; }
  /// theta_i for i with x_i > 0; unset entries are NaN.
  const std::vector<double>& removal_marginals() const { return theta_; }
  /// eta_i for i with x_i < b_i; unset entries are NaN.
  const std::vector<double>& addition_marginals() const { return eta_; }

  struct Gains {
    std::vector<double> add;     // Delta+_i, -inf when ineligible
    std::vector<double> remove;  // Delta-_i, -inf when ineligible
  };
  /// Best-case improvements of evaluating the point above (add) or below
  /// (remove) each player's current count. Eligibility requires the target
  /// point unevaluated and a fully-evaluated counterpart at another player;
  /// empty inner min/max yields -inf.
  Gains best_case_gains() const;

private:
  void seed_initial_points();
  void resolve();

  const Instance& instance_;
  EvaluationLedger& ledger_;
  BoundMode bound_mode_;
  int iteration_ = 0;
  Allocation allocation_;
  double restricted_value_ = 0.0;
  BoundModel bounds_;
  std::vector<double> theta_;
  std::vector<double> eta_;
  double swap_margin_ = 0.0;
  std::pair<int, int> margin_pair_{-1, -1};  // (i, j) attaining d
};

/// Runs 1-opt local search to convergence (d <= 0) or max_iters.
SolveReport run_one_opt(const Instance& instance, EvaluationLedger& ledger,
                        const OneOptOptions& options = {});

}  // namespace ralloc
