#ifndef TREESPECTRA_PIECEWISE_HPP
#define TREESPECTRA_PIECEWISE_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "treespectra/errors.hpp"

namespace treespectra {

enum class ProfileKind { Constant, Power, Linear };

/// One radial profile on an interval: a constant c, a power c*t^gamma, or a
/// linear segment a + b*t (the linear kind is what tabulated data expands to).
struct Profile {
  ProfileKind kind = ProfileKind::Constant;
  double c = 0.0;
  double gamma = 0.0;
  double a = 0.0;
  double b = 0.0;

  static Profile constant(double c) { return {ProfileKind::Constant, c, 0, 0, 0}; }
  static Profile power(double c, double gamma) {
    return {ProfileKind::Power, c, gamma, 0, 0};
  }
  static Profile linear(double a, double b) {
    return {ProfileKind::Linear, 0, 0, a, b};
  }

  double value(double t) const {
    switch (kind) {
      case ProfileKind::Constant: return c;
      case ProfileKind::Power: return c == 0.0 ? 0.0 : c * std::pow(t, gamma);
      case ProfileKind::Linear: return a + b * t;
    }
    return 0.0;
  }

  // Profiles are monotone on (0, inf); extrema sit at the endpoints.
  double max_on(double lo, double hi) const {
    return std::max(value(lo), value(hi));
  }
  double min_on(double lo, double hi) const {
    return std::min(value(lo), value(hi));
  }

  bool nonnegative_on(double lo, double hi) const {
    return min_on(lo, hi) >= 0.0;
  }
};

namespace detail {

// \int_lo^hi t^e dt, allowing the divergent case (returns +inf).
inline double monomial_integral(double lo, double hi, double e) {
  if (hi <= lo) return 0.0;
  if (lo <= 0.0 && e <= -1.0) return std::numeric_limits<double>::infinity();
  if (e == -1.0) return std::log(hi / lo);
  double ep = e + 1.0;
  double hi_p = std::pow(hi, ep);
  double lo_p = lo == 0.0 ? 0.0 : std::pow(lo, ep);
  return (hi_p - lo_p) / ep;
}

template <typename F>
double simpson_panel(F&& f, double a, double b) {
  return (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
}

template <typename F>
double adaptive_simpson(F&& f, double a, double b, double whole, double tol,
                        int depth) {
  double m = 0.5 * (a + b);
  double left = simpson_panel(f, a, m);
  double right = simpson_panel(f, m, b);
  double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, m, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, right, 0.5 * tol, depth - 1);
}

template <typename F>
double integrate_adaptive(F&& f, double a, double b, double rel_tol = 1e-12) {
  if (b <= a) return 0.0;
  double whole = simpson_panel(f, a, b);
  double scale = std::max(std::abs(whole), 1e-300);
  return adaptive_simpson(f, a, b, whole, rel_tol * scale, 40);
}

}  // namespace detail

/// \int_lo^hi profile(t)^q * t^r dt with [lo,hi] inside the profile's piece.
/// Closed forms for constant and power profiles (any q > 0) and for linear
/// profiles with q = 1; adaptive quadrature otherwise.  Divergent integrals
/// (negative powers reaching t = 0) come back as +inf.
inline double piece_integral(const Profile& p, double lo, double hi,
                             double q = 1.0, double r = 0.0) {
  if (hi <= lo) return 0.0;
  if (q <= 0.0) throw DomainError("piece_integral: exponent q must be positive");
  switch (p.kind) {
    case ProfileKind::Constant: {
      if (p.c == 0.0) return 0.0;
      return std::pow(p.c, q) * detail::monomial_integral(lo, hi, r);
    }
    case ProfileKind::Power: {
      if (p.c == 0.0) return 0.0;
      return std::pow(p.c, q) *
             detail::monomial_integral(lo, hi, p.gamma * q + r);
    }
    case ProfileKind::Linear: {
      if (q == 1.0) {
        return p.a * detail::monomial_integral(lo, hi, r) +
               p.b * detail::monomial_integral(lo, hi, r + 1.0);
      }
      auto f = [&](double t) {
        double v = std::max(p.a + p.b * t, 0.0);
        double w = std::pow(v, q);
        return r == 0.0 ? w : w * std::pow(t, r);
      };
      if (lo == 0.0 && r < 0.0) {
        // split off the singular end and rely on r > -1 integrability
        double cut = std::min(hi, 1e-6 * (hi - lo) + lo);
        double head = detail::integrate_adaptive(
            [&](double t) { return f(t); }, cut * 1e-8, cut);
        return head + detail::integrate_adaptive(f, cut, hi);
      }
      return detail::integrate_adaptive(f, lo, hi);
    }
  }
  return 0.0;
}

}  // namespace treespectra

#endif  // TREESPECTRA_PIECEWISE_HPP
