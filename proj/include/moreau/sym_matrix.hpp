#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "point.hpp"

namespace moreau {

// Dense symmetric matrix. Curvature oracles in this library produce 1-D or
// diagonal matrices; dense storage is accepted but only diagonal forms are
// ever inverted.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  static SymMatrix diagonal(const std::vector<double>& d) {
    SymMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.a_[i * d.size() + i] = d[i];
    return m;
  }

  static SymMatrix scalar1d(double v) { return diagonal({v}); }

  std::size_t dim() const { return n_; }

  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  void set(std::size_t i, std::size_t j, double v) {
    a_[i * n_ + j] = v;
    a_[j * n_ + i] = v;
  }

  bool is_diagonal(double tol = 0.0) const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j && std::abs(a_[i * n_ + j]) > tol) return false;
    return true;
  }

  std::vector<double> diag() const {
    std::vector<double> d(n_);
    for (std::size_t i = 0; i < n_; ++i) d[i] = a_[i * n_ + i];
    return d;
  }

  double quadratic_form(const Point& v) const {
    if (v.dim() != n_) throw dimension_mismatch("quadratic_form dimension");
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) s += v[i] * a_[i * n_ + j] * v[j];
    return s;
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

}  // namespace moreau
