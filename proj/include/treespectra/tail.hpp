#ifndef TREESPECTRA_TAIL_HPP
#define TREESPECTRA_TAIL_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

namespace treespectra {

/// Policy for deciding convergence of a nonnegative series from a finite
/// number of terms.  If the term ratios over the last `window` terms all stay
/// at or below `ratio_bound` (< 1), the tail is bounded geometrically and the
/// series is declared convergent.  If the last `window` terms all stay at or
/// above `divergence_floor`, it is declared divergent.  Anything else is
/// inconclusive.
struct TailPolicy {
  int window = 16;
  double ratio_bound = 0.98;
  double divergence_floor = 1e-12;
};

enum class TailVerdict { Converged, Diverged, Inconclusive };

struct SeriesSum {
  TailVerdict verdict = TailVerdict::Inconclusive;
  double partial = 0.0;     // sum of the materialized terms
  double tail_bound = 0.0;  // certified bound on the remainder (Converged only)
};

/// Classify and sum a nonnegative series given its materialized terms.
/// Terms that are exactly zero from some index onward count as convergent
/// (finite support).
inline SeriesSum sum_with_tail(const std::vector<double>& terms,
                               const TailPolicy& policy = {}) {
  SeriesSum out;
  for (double v : terms) out.partial += v;

  std::size_t n = terms.size();
  std::size_t last_nonzero = n;
  while (last_nonzero > 0 && terms[last_nonzero - 1] == 0.0) --last_nonzero;
  if (last_nonzero + static_cast<std::size_t>(policy.window) <= n) {
    // trailing run of zeros at least `window` long: finite support
    out.verdict = TailVerdict::Converged;
    out.tail_bound = 0.0;
    return out;
  }

  std::size_t k = static_cast<std::size_t>(std::max(policy.window, 2));
  if (n < k + 1) {
    out.verdict = TailVerdict::Inconclusive;
    return out;
  }

  double max_ratio = 0.0;
  double min_term = terms[n - k];
  bool ratios_defined = true;
  for (std::size_t i = n - k; i < n; ++i) {
    min_term = std::min(min_term, terms[i]);
    if (i > n - k) {
      if (terms[i - 1] <= 0.0) {
        ratios_defined = false;
      } else {
        max_ratio = std::max(max_ratio, terms[i] / terms[i - 1]);
      }
    }
  }

  if (ratios_defined && max_ratio <= policy.ratio_bound) {
    out.verdict = TailVerdict::Converged;
    out.tail_bound =
        terms[n - 1] * max_ratio / (1.0 - max_ratio);
    return out;
  }
  if (min_term >= policy.divergence_floor) {
    out.verdict = TailVerdict::Diverged;
    return out;
  }
  out.verdict = TailVerdict::Inconclusive;
  return out;
}

}  // namespace treespectra

#endif  // TREESPECTRA_TAIL_HPP
