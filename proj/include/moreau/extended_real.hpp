#pragma once

#include <cmath>
#include <compare>
#include <limits>

#include "errors.hpp"

namespace moreau {

// Value in R u {+inf}. -inf and NaN are rejected at construction so that
// downstream arithmetic can never produce inf - inf. Addition saturates.
class ExtendedReal {
 public:
  ExtendedReal() = default;

  ExtendedReal(double v) : v_(v) {
    if (std::isnan(v) || v == -std::numeric_limits<double>::infinity())
      throw infinite_value("extended real must be finite or +inf");
  }

  static ExtendedReal infinity() {
    ExtendedReal r;
    r.v_ = std::numeric_limits<double>::infinity();
    return r;
  }

  bool finite() const { return std::isfinite(v_); }

  // Raw value; +inf when not finite.
  double value() const { return v_; }

  ExtendedReal operator+(const ExtendedReal& o) const {
    if (!finite() || !o.finite()) return infinity();
    return ExtendedReal(v_ + o.v_);
  }

  friend auto operator<=>(const ExtendedReal&, const ExtendedReal&) = default;

 private:
  double v_ = 0.0;
};

inline ExtendedReal operator+(const ExtendedReal& a, double b) {
  return a + ExtendedReal(b);
}

}  // namespace moreau
