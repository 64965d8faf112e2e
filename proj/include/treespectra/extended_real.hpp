#ifndef TREESPECTRA_EXTENDED_REAL_HPP
#define TREESPECTRA_EXTENDED_REAL_HPP

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace treespectra {

/// Nonnegative extended real: either a finite double or the distinguished
/// value +infinity.  Infinity is an explicit variant, not a sentinel float;
/// value() on an infinite result throws.
class ExtendedReal {
public:
  ExtendedReal() : value_(0.0), finite_(true) {}
  ExtendedReal(double v) : value_(v), finite_(true) {
    if (std::isinf(v) || std::isnan(v))
      throw std::invalid_argument("ExtendedReal: finite constructor needs a finite value");
  }

  static ExtendedReal infinity() {
    ExtendedReal r;
    r.finite_ = false;
    return r;
  }

  bool is_finite() const { return finite_; }

  double value() const {
    if (!finite_)
      throw std::logic_error("ExtendedReal: value() called on infinity");
    return value_;
  }

  /// Finite value, or +inf as a double; for printing and comparisons only.
  double as_double() const {
    return finite_ ? value_ : std::numeric_limits<double>::infinity();
  }

  ExtendedReal operator+(const ExtendedReal& o) const {
    if (!finite_ || !o.finite_) return infinity();
    return ExtendedReal(value_ + o.value_);
  }

  ExtendedReal scaled(double c) const {
    if (!finite_) return c == 0.0 ? ExtendedReal(0.0) : infinity();
    return ExtendedReal(c * value_);
  }

  friend bool operator<(const ExtendedReal& a, const ExtendedReal& b) {
    return a.as_double() < b.as_double();
  }
  friend bool operator<=(const ExtendedReal& a, const ExtendedReal& b) {
    return a.as_double() <= b.as_double();
  }
  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtendedReal& x) {
    if (x.finite_) return os << x.value_;
    return os << "infinity";
  }

private:
  double value_;
  bool finite_;
};

}  // namespace treespectra

#endif  // TREESPECTRA_EXTENDED_REAL_HPP
