#include "ralloc/bounds.hpp"

#include <algorithm>

namespace ralloc {

namespace {

// Chord through (p, fp) and (q, fq) at k, as a single division so that
// collinear points on the 1/4096 value grid evaluate exactly.
double chord_at(int p, double fp, int q, double fq, int k) {
  return (fp * static_cast<double>(q - k) + fq * static_cast<double>(k - p)) /
         static_cast<double>(q - p);
}

}  // namespace

BoundModel monotone_bounds(const Instance& instance,
                           const EvaluationLedger& ledger) {
  BoundModel model;
  model.mode_ = BoundMode::monotone;
  const int n = instance.player_count();
  model.lower_.resize(static_cast<std::size_t>(n));
  model.upper_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int m = instance.item_budget(i) + 1;
    auto& lo = model.lower_[static_cast<std::size_t>(i)];
    auto& up = model.upper_[static_cast<std::size_t>(i)];
    lo.assign(static_cast<std::size_t>(m), 0.0);
    up.assign(static_cast<std::size_t>(m), instance.value_cap());

    double running = 0.0;  // max of evaluated values at or right of k
    for (int k = m - 1; k >= 0; --k) {
      if (auto v = ledger.try_value(i, k)) running = std::max(running, *v);
      lo[static_cast<std::size_t>(k)] = running;
    }
    running = instance.value_cap();  // min of evaluated values at or left of k
    for (int k = 0; k < m; ++k) {
      if (auto v = ledger.try_value(i, k)) running = std::min(running, *v);
      up[static_cast<std::size_t>(k)] = running;
    }
  }
  return model;
}

BoundModel convex_bounds(const Instance& instance,
                         const EvaluationLedger& ledger, bool force) {
  if (!instance.convex_flagged() && !force) {
    throw NotConvexFlagged(
        "convexity-based bounds need a convex-flagged instance (or force)");
  }
  BoundModel model;
  model.mode_ = BoundMode::convex;
  model.heuristic_ = !instance.convex_flagged();
  const int n = instance.player_count();
  const double cap = instance.value_cap();
  model.lower_.resize(static_cast<std::size_t>(n));
  model.upper_.resize(static_cast<std::size_t>(n));

  for (int i = 0; i < n; ++i) {
    const int m = instance.item_budget(i) + 1;
    auto& lo = model.lower_[static_cast<std::size_t>(i)];
    auto& up = model.upper_[static_cast<std::size_t>(i)];
    lo.assign(static_cast<std::size_t>(m), 0.0);
    up.assign(static_cast<std::size_t>(m), cap);
    const auto pts = ledger.evaluated_points(i);

    for (int k = 0; k < m; ++k) {
      if (auto v = ledger.try_value(i, k)) {
        lo[static_cast<std::size_t>(k)] = *v;
        up[static_cast<std::size_t>(k)] = *v;
        continue;
      }
      double u = cap;
      double l = 0.0;
      for (const auto& [p, fp] : pts) {
        if (p < k) {
          u = std::min(u, fp);  // non-increasing row
        } else {
          l = std::max(l, fp);  // monotone floor (p > k here; p == k is evaluated)
          // chord through (0, M) and (p, fp), valid left of p
          u = std::min(u, chord_at(0, cap, p, fp, k));
        }
      }
      for (std::size_t a = 0; a < pts.size(); ++a) {
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
          const auto [p, fp] = pts[a];
          const auto [q, fq] = pts[b];
          const double c = chord_at(p, fp, q, fq, k);
          if (p < k && k < q) {
            u = std::min(u, c);  // secant over-estimates between the points
          } else {
            l = std::max(l, c);  // and under-estimates outside them
          }
        }
      }
      l = std::clamp(l, 0.0, cap);
      u = std::clamp(u, 0.0, cap);
      // Bound families can cross on non-convex rows in forced mode; keep the
      // model consistent. Cannot trigger on truly convex rows.
      if (l > u) l = u;
      lo[static_cast<std::size_t>(k)] = l;
      up[static_cast<std::size_t>(k)] = u;
    }
  }
  return model;
}

BoundModel compute_bounds(const Instance& instance,
                          const EvaluationLedger& ledger, BoundMode mode) {
  if (mode == BoundMode::convex) {
    return convex_bounds(instance, ledger, /*force=*/true);
  }
  return monotone_bounds(instance, ledger);
}

double model_bound_objective(const BoundModel& model, const Allocation& x,
                             BoundSide side) {
  double total = 0.0;
  for (int i = x.size() - 1; i >= 0; --i) {
    total = (side == BoundSide::lower ? model.lower(i, x[i])
                                      : model.upper(i, x[i])) +
            total;
  }
  return total;
}

}  // namespace ralloc
