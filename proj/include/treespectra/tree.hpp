#ifndef TREESPECTRA_TREE_HPP
#define TREESPECTRA_TREE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treespectra/errors.hpp"
#include "treespectra/extended_real.hpp"
#include "treespectra/tail.hpp"

namespace treespectra {

/// Closed-form generator for trees with constant branching b >= 2 and radii
/// t_n = b^{n/(d-1)}.
struct BRegularGenerator {
  int b;
  double d;
};

/// A regular rooted metric tree, determined by the branching numbers {b_n}
/// (b_0 = 1, b_n >= 2 for n >= 1) and the strictly increasing vertex radii
/// {t_n} (t_0 = 0).  Sequences are materialized up to a finite horizon; the
/// input is assumed (not verified) to continue unboundedly beyond it.
/// Immutable after construction.
class RegularTree {
public:
  /// branching[i] = b_{i+1}, radii[i] = t_{i+1}; horizon = radii.size().
  RegularTree(std::vector<int> branching, std::vector<double> radii,
              std::optional<BRegularGenerator> generator = std::nullopt)
      : generator_(generator) {
    if (radii.empty()) throw DomainError("tree: horizon must be at least 1");
    if (branching.size() + 1 < radii.size())
      throw DomainError("tree: need branching numbers b_1..b_{horizon-1}");
    horizon_ = static_cast<int>(radii.size());
    t_.resize(horizon_ + 1);
    b_.resize(horizon_ + 1, 0);
    t_[0] = 0.0;
    b_[0] = 1;
    for (int n = 1; n <= horizon_; ++n) {
      t_[n] = radii[n - 1];
      if (!(t_[n] > t_[n - 1]))
        throw DomainError("tree: radii must be strictly increasing and positive");
      if (n - 1 < static_cast<int>(branching.size())) {
        b_[n] = branching[n - 1];
        if (b_[n] < 2) throw DomainError("tree: branching numbers must be >= 2");
      }
    }
    G_.resize(horizon_ + 1);
    R_.resize(horizon_ + 1);
    G_[0] = 1.0;
    R_[0] = 0.0;
    for (int n = 1; n <= horizon_; ++n) {
      if (b_[n - 1] == 0)
        throw DomainError("tree: missing branching number");
      G_[n] = (n == 1) ? 1.0 : G_[n - 1] * b_[n - 1];
      R_[n] = R_[n - 1] + (t_[n] - t_[n - 1]) / G_[n];
    }
  }

  int horizon() const { return horizon_; }
  double radius(int n) const { return t_.at(n); }
  double max_radius() const { return t_[horizon_]; }
  int branching(int n) const { return b_.at(n); }

  /// g0 on the interval (t_n, t_{n+1}]: the product b_0 b_1 ... b_n.
  double edge_count(int n) const {
    if (n < 0 || n >= horizon_) throw DomainError("edge_count: bad generation");
    return G_[n + 1];
  }

  const std::optional<BRegularGenerator>& generator() const { return generator_; }

  /// Index n with t in (t_n, t_{n+1}].
  int generation_of(double t) const {
    if (t <= 0.0) throw DomainError("generation_of: t must be positive");
    if (t > t_[horizon_] * (1.0 + 1e-15))
      throw HorizonExceededError("radius beyond materialized horizon");
    auto it = std::lower_bound(t_.begin(), t_.end(), t);
    int i = static_cast<int>(it - t_.begin());
    if (i > horizon_) i = horizon_;  // t == t_horizon up to roundoff
    return i - 1;
  }

  /// Branching function g0(t) with the half-open convention: on (t_n, t_{n+1}]
  /// the value is b_0...b_n, so the value at a vertex radius comes from the
  /// interval below it.
  double branching_function(double t) const {
    return G_[generation_of(t) + 1];
  }

  /// \int_0^t ds/g0(s), exact piecewise.
  double inv_branching_integral(double t) const {
    if (t == 0.0) return 0.0;
    int n = generation_of(t);
    return R_[n] + (t - t_[n]) / G_[n + 1];
  }

private:
  int horizon_;
  std::vector<double> t_;
  std::vector<int> b_;
  std::vector<double> G_;  // G_[n] = g0 on (t_{n-1}, t_n]; G_[0] unused sentinel 1
  std::vector<double> R_;  // R_[n] = \int_0^{t_n} ds/g0
  std::optional<BRegularGenerator> generator_;
};

/// b-regular tree with radii t_n = b^{n/(d-1)}, carrying its generator so
/// tail sums can use closed forms.
inline RegularTree b_regular(int b, double d, int horizon) {
  if (b < 2) throw DomainError("b_regular: b must be an integer >= 2");
  if (!(d > 1.0)) throw DomainError("b_regular: dimension must exceed 1");
  if (horizon < 1) throw DomainError("b_regular: horizon must be at least 1");
  std::vector<int> branching(horizon, b);
  std::vector<double> radii(horizon);
  for (int n = 1; n <= horizon; ++n)
    radii[n - 1] = std::pow(static_cast<double>(b), n / (d - 1.0));
  return RegularTree(std::move(branching), std::move(radii),
                     BRegularGenerator{b, d});
}

/// Reduced height l = \int_0^inf dt/g0(t).  Closed form for generated trees;
/// otherwise the partial sum plus a geometric tail certificate, with an
/// inconclusive error (carrying the partial sum) when the tail test fails.
inline ExtendedReal reduced_height(const RegularTree& tree,
                                   const TailPolicy& policy = {}) {
  if (tree.generator()) {
    double b = tree.generator()->b;
    double d = tree.generator()->d;
    double rho = std::pow(b, 1.0 / (d - 1.0));  // radius growth factor
    if (rho >= b) return ExtendedReal::infinity();
    return ExtendedReal(rho + rho * (rho - 1.0) / (b - rho));
  }
  std::vector<double> terms(tree.horizon());
  for (int n = 0; n < tree.horizon(); ++n)
    terms[n] = (tree.radius(n + 1) - tree.radius(n)) / tree.edge_count(n);
  SeriesSum s = sum_with_tail(terms, policy);
  switch (s.verdict) {
    case TailVerdict::Converged: return ExtendedReal(s.partial + s.tail_bound);
    case TailVerdict::Diverged: return ExtendedReal::infinity();
    case TailVerdict::Inconclusive: break;
  }
  throw InconclusiveError(
      "reduced_height: horizon too small to decide convergence", s.partial);
}

struct TreeClass {
  enum class Kind { Recurrent, Transient };
  Kind kind;
  ExtendedReal reduced_height;  // finite iff Transient
};

inline TreeClass classify(const RegularTree& tree, const TailPolicy& policy = {}) {
  ExtendedReal l = reduced_height(tree, policy);
  return {l.is_finite() ? TreeClass::Kind::Transient : TreeClass::Kind::Recurrent,
          l};
}

/// Harmonic profile h0(t) = \int_t^inf ds/g0(s) of a transient tree;
/// h0(0) equals the reduced height.
inline double harmonic_profile(const RegularTree& tree, double t,
                               const TailPolicy& policy = {}) {
  TreeClass cls = classify(tree, policy);
  if (cls.kind != TreeClass::Kind::Transient)
    throw UnsupportedOperationError(
        "harmonic_profile: tree is recurrent, h0 is identically infinite");
  if (t < 0.0) throw DomainError("harmonic_profile: t must be nonnegative");
  return cls.reduced_height.value() - tree.inv_branching_integral(t);
}

struct DimensionFit {
  double d;
  double c_lower;  // tightest constants with c_lower t^{d-1} <= g0 <= c_upper t^{d-1}
  double c_upper;  // over the whole radius range spanned by the window
};

/// Least-squares estimate of the global dimension over generations
/// [n_lo, n_hi], plus the tightest two-sided power-law envelope.  Returns
/// nothing when the envelope spread c_upper/c_lower exceeds ratio_cap.
inline std::optional<DimensionFit> global_dimension(const RegularTree& tree,
                                                    int n_lo, int n_hi,
                                                    double ratio_cap = 10.0) {
  if (n_lo < 1) n_lo = 1;
  if (n_hi > tree.horizon() - 1)
    throw DomainError("global_dimension: window exceeds horizon");
  if (n_hi - n_lo + 1 < 4)
    throw DomainError("global_dimension: window must span at least 4 generations");

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = n_hi - n_lo + 1;
  for (int n = n_lo; n <= n_hi; ++n) {
    double x = std::log(tree.radius(n));
    double y = std::log(tree.edge_count(n));  // g0 just above t_n
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double denom = m * sxx - sx * sx;
  if (denom <= 0.0)
    throw DomainError("global_dimension: degenerate window");
  double slope = (m * sxy - sx * sy) / denom;
  double d = 1.0 + slope;

  // g0 is constant on (t_n, t_{n+1}] while t^{d-1} is monotone, so the
  // envelope over all radii in the window is decided at the breakpoints.
  double c_upper = 0.0;
  double c_lower = std::numeric_limits<double>::infinity();
  for (int n = n_lo; n <= n_hi; ++n) {
    double g = tree.edge_count(n);
    c_upper = std::max(c_upper, g / std::pow(tree.radius(n), d - 1.0));
    c_lower = std::min(c_lower, g / std::pow(tree.radius(n + 1), d - 1.0));
  }
  if (c_upper / c_lower > ratio_cap) return std::nullopt;
  return DimensionFit{d, c_lower, c_upper};
}

/// Default fit window for callers that only need applicability checks.
inline std::optional<DimensionFit> global_dimension(const RegularTree& tree,
                                                    double ratio_cap = 10.0) {
  int hi = tree.horizon() - 1;
  int lo = std::max(1, hi - std::max(8, tree.horizon() / 2));
  return global_dimension(tree, lo, hi, ratio_cap);
}

}  // namespace treespectra

#endif  // TREESPECTRA_TREE_HPP
