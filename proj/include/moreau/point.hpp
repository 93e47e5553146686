#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "errors.hpp"

namespace moreau {

// Point in R^d, d >= 1. Coordinates are expected to stay finite; oracle
// entry points validate this.
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t dim, double fill = 0.0) : c_(dim, fill) {}
  Point(std::initializer_list<double> xs) : c_(xs) {}

  static Point scalar(double x) { return Point{x}; }

  std::size_t dim() const { return c_.size(); }

  double operator[](std::size_t i) const { return c_[i]; }
  double& operator[](std::size_t i) { return c_[i]; }

  // Single coordinate of a 1-D point.
  double scalar_value() const {
    if (c_.size() != 1) throw dimension_mismatch("scalar_value on point with dim != 1");
    return c_[0];
  }

  bool all_finite() const {
    for (double v : c_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  const std::vector<double>& coords() const { return c_; }

  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  friend bool operator==(const Point& a, const Point& b) { return a.c_ == b.c_; }

 private:
  std::vector<double> c_;
};

inline void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw dimension_mismatch("point dimensions differ");
}

inline Point operator+(const Point& a, const Point& b) {
  require_same_dim(a, b);
  Point r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Point operator-(const Point& a, const Point& b) {
  require_same_dim(a, b);
  Point r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Point operator*(double s, const Point& a) {
  Point r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = s * a[i];
  return r;
}

inline double dot(const Point& a, const Point& b) {
  require_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline double squared_norm(const Point& a) { return dot(a, a); }
inline double norm(const Point& a) { return std::sqrt(squared_norm(a)); }
inline double distance(const Point& a, const Point& b) { return norm(a - b); }

// Axis-aligned box [lo, hi].
struct Box {
  Point lo, hi;

  std::size_t dim() const { return lo.dim(); }

  static Box cube(std::size_t dim, double a, double b) {
    return Box{Point(dim, a), Point(dim, b)};
  }

  bool contains(const Point& x, double tol = 0.0) const {
    require_same_dim(lo, x);
    for (std::size_t i = 0; i < x.dim(); ++i)
      if (x[i] < lo[i] - tol || x[i] > hi[i] + tol) return false;
    return true;
  }

  // Strict interior membership with a margin.
  bool interior_contains(const Point& x, double margin) const {
    require_same_dim(lo, x);
    for (std::size_t i = 0; i < x.dim(); ++i)
      if (x[i] <= lo[i] + margin || x[i] >= hi[i] - margin) return false;
    return true;
  }

  Point clamp(const Point& x) const {
    require_same_dim(lo, x);
    Point r(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i)
      r[i] = std::min(std::max(x[i], lo[i]), hi[i]);
    return r;
  }
};

}  // namespace moreau
