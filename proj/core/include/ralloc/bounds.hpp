#pragma once

#include <vector>

#include "ralloc/instance.hpp"
#include "ralloc/ledger.hpp"

namespace ralloc {

enum class BoundMode { monotone, convex };
enum class BoundSide { lower, upper };

/// Per-player lower/upper bound curves l_i, u_i derived from an evaluation
/// ledger. Immutable snapshot: 0 <= l <= u <= M everywhere, both rows
/// non-increasing in k, and l = u = f at evaluated points.
class BoundModel {
public:
  BoundModel() = default;

  BoundMode mode() const { return mode_; }
  /// True when convex formulas were forced onto a non-convex-flagged
  /// instance; such bounds carry no validity guarantee.
  bool heuristic() const { return heuristic_; }

  int player_count() const { return static_cast<int>(lower_.size()); }
  int row_size(int player) const {
    return static_cast<int>(lower_[static_cast<std::size_t>(player)].size());
  }

  double lower(int player, int items) const {
    return lower_[static_cast<std::size_t>(player)]
                 [static_cast<std::size_t>(items)];
  }
  double upper(int player, int items) const {
    return upper_[static_cast<std::size_t>(player)]
                 [static_cast<std::size_t>(items)];
  }
  double gap(int player, int items) const {
    return upper(player, items) - lower(player, items);
  }

  const std::vector<std::vector<double>>& lower_rows() const { return lower_; }
  const std::vector<std::vector<double>>& upper_rows() const { return upper_; }

private:
  friend BoundModel monotone_bounds(const Instance&, const EvaluationLedger&);
  friend BoundModel convex_bounds(const Instance&, const EvaluationLedger&,
                                  bool);

  BoundMode mode_ = BoundMode::monotone;
  bool heuristic_ = false;
  std::vector<std::vector<double>> lower_;
  std::vector<std::vector<double>> upper_;
};

/// Bounds valid for any non-increasing cost row:
///   l_i(k) = max{0, max_{p >= k} f_i(p) v_{i,p}}
///   u_i(k) = min{M, min_{q <= k} f_i(q) v_{i,q}}
BoundModel monotone_bounds(const Instance& instance,
                           const EvaluationLedger& ledger);

/// Tighter bounds valid when rows are convex and non-increasing: chords
/// between evaluated points bound unevaluated ones from above between the
/// points and from below outside them, plus the cap-anchored chord through
/// (0, M) and the monotone floor/ceiling. Throws NotConvexFlagged unless the
/// instance is flagged convex or `force` is set; forced models are marked
/// heuristic.
BoundModel convex_bounds(const Instance& instance,
                         const EvaluationLedger& ledger, bool force = false);

/// Dispatch on mode; convex mode is forced (heuristic when unflagged).
BoundModel compute_bounds(const Instance& instance,
                          const EvaluationLedger& ledger, BoundMode mode);

/// l(x) or u(x): the model objective of an allocation on one side.
double model_bound_objective(const BoundModel& model, const Allocation& x,
                             BoundSide side);

}  // namespace ralloc
