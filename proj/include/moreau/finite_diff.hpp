#pragma once

#include <cmath>
#include <functional>
#include <limits>

#include "point.hpp"

// Central-difference helpers. The first-order step follows the usual
// cbrt(eps) * max(1, |x|) rule; second differences use eps^(1/4).
namespace moreau::fd {

inline double eps() { return std::numeric_limits<double>::epsilon(); }

inline double step1(double scale) {
  return std::cbrt(eps()) * std::max(1.0, std::abs(scale));
}

inline double step2(double scale) {
  return std::pow(eps(), 0.25) * std::max(1.0, std::abs(scale));
}

inline double central(const std::function<double(double)>& f, double x, double h = 0.0) {
  if (h <= 0.0) h = step1(x);
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline double second(const std::function<double(double)>& f, double x, double h = 0.0) {
  if (h <= 0.0) h = step2(x);
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

inline Point gradient(const std::function<double(const Point&)>& f, const Point& x) {
  Point g(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    double h = step1(x[i]);
    Point a = x, b = x;
    a[i] += h;
    b[i] -= h;
    g[i] = (f(a) - f(b)) / (2.0 * h);
  }
  return g;
}

}  // namespace moreau::fd
