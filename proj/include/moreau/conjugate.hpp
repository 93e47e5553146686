#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "envelope.hpp"
#include "function_spec.hpp"
#include "inner_solver.hpp"

namespace moreau {

struct GridSpec {
  double lo = -8.0;
  double hi = 8.0;
  int n = 4001;
};

struct ConjugateOptions {
  int grid_points = 4001;
  // Sup over the doubled box growing by more than this factor, with the
  // argmax pinned to the boundary, is reported as +inf.
  double growth_factor = 1.5;
  SolveOptions solve;
};

struct ConjugateValue {
  ExtendedReal value;
  std::optional<Point> maximizer;
  bool bounded = true;
};

inline Box default_conjugate_box(std::size_t dim) { return Box::cube(dim, -8.0, 8.0); }

namespace detail {

struct GridSup {
  double sup = -std::numeric_limits<double>::infinity();
  double arg = 0.0;
  bool any_finite = false;
};

inline GridSup grid_sup_1d(const FunctionSpec& f, double x, double lo, double hi, int n) {
  GridSup out;
  for (int i = 0; i < n; ++i) {
    double y = lo + (hi - lo) * i / (n - 1);
    ExtendedReal fy = evaluate(f, Point::scalar(y));
    if (!fy.finite()) continue;
    double v = x * y - fy.value();
    if (!out.any_finite || v > out.sup) {
      out.sup = v;
      out.arg = y;
      out.any_finite = true;
    }
  }
  return out;
}

inline ConjugateValue conjugate_by_solver(const FunctionSpec& f, const Point& x,
                                          const ConjugateOptions& opts) {
  auto value = [&f, &x](const Point& y) {
    ExtendedReal fy = evaluate(f, y);
    return fy.finite() ? fy.value() - dot(x, y) : fy.value();
  };
  auto grad = [&f, &x](const Point& y) { return f.gradient(y) - x; };
  SolveOptions sopts = opts.solve;
  if (f.grad_lipschitz) sopts.curvature_bound = *f.grad_lipschitz;
  SolveCertificate cert = minimize_strongly_convex(value, grad, -f.rho, x, sopts);
  if (!cert.converged) throw solve_failure("conjugate solve did not converge for " + f.name);
  Point y = cert.minimizer;
  double v = dot(x, y) - evaluate(f, y).value();
  return {ExtendedReal(v), y, true};
}

}  // namespace detail

// f*(x) = sup_y <x, y> - f(y), restricted to search_box. Strongly convex
// differentiable functions are solved exactly; everything else runs a 1-D
// dense grid (grid_points samples, one 10x refinement around the incumbent)
// with an unboundedness probe over the doubled box.
inline ConjugateValue conjugate_value(const FunctionSpec& f, const Point& x,
                                      const Box& search_box,
                                      const ConjugateOptions& opts = {}) {
  require_point(f, x);
  if (f.rho < 0.0 && f.gradient) return detail::conjugate_by_solver(f, x, opts);
  if (f.dim != 1)
    throw solve_failure("grid conjugate requires dim 1; " + f.name +
                        " is neither 1-D nor strongly convex");

  double lo = search_box.lo[0], hi = search_box.hi[0];
  double xs = x.scalar_value();
  int n = opts.grid_points;
  detail::GridSup coarse = detail::grid_sup_1d(f, xs, lo, hi, n);
  if (!coarse.any_finite)
    throw std::invalid_argument("search box does not intersect dom of " + f.name);

  // Unboundedness probe over the doubled box.
  double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  double lo2 = mid - 2.0 * half, hi2 = mid + 2.0 * half;
  detail::GridSup wide = detail::grid_sup_1d(f, xs, lo2, hi2, n);
  double cell2 = (hi2 - lo2) / (n - 1);
  bool on_boundary = wide.any_finite &&
                     (wide.arg <= lo2 + cell2 || wide.arg >= hi2 - cell2);
  double growth = (opts.growth_factor - 1.0) * std::max(std::abs(coarse.sup), 1e-9);
  if (on_boundary && wide.sup > coarse.sup + growth)
    return {ExtendedReal::infinity(), std::nullopt, false};

  // One refinement pass at 10x resolution around the incumbent.
  double spacing = (hi - lo) / (n - 1);
  double rlo = std::max(lo, coarse.arg - spacing), rhi = std::min(hi, coarse.arg + spacing);
  detail::GridSup fine = detail::grid_sup_1d(f, xs, rlo, rhi, 21);
  double best = std::max(coarse.sup, fine.sup);
  double arg = fine.any_finite && fine.sup >= coarse.sup ? fine.arg : coarse.arg;
  return {ExtendedReal(best), Point::scalar(arg), true};
}

inline ConjugateValue conjugate_value(const FunctionSpec& f, const Point& x) {
  return conjugate_value(f, x, default_conjugate_box(f.dim));
}

// f(x) + f*(y) - <x, y>; nonnegative, zero iff y is a subgradient at x.
inline double fenchel_young_gap(const FunctionSpec& f, const Point& x, const Point& y,
                                const Box& search_box, const ConjugateOptions& opts = {}) {
  ExtendedReal fx = evaluate(f, x);
  if (!fx.finite()) throw infinite_value("fenchel_young_gap requires f(x) finite");
  ConjugateValue c = conjugate_value(f, y, search_box, opts);
  if (!c.bounded) throw unbounded_conjugate("conjugate is +inf at y");
  return fx.value() + c.value.value() - dot(x, y);
}

inline double fenchel_young_gap(const FunctionSpec& f, const Point& x, const Point& y) {
  return fenchel_young_gap(f, x, y, default_conjugate_box(f.dim));
}

// (f box g)(x) = inf_y f(y) + g(x - y) on a 1-D grid with one 10x refinement.
inline double inf_conv_value(const FunctionSpec& f, const FunctionSpec& g, const Point& x,
                             const GridSpec& grid = {}) {
  if (f.dim != 1 || g.dim != 1) throw dimension_mismatch("inf_conv_value requires dim 1");
  require_point(f, x);
  double xs = x.scalar_value();
  auto at = [&](double y) {
    ExtendedReal a = evaluate(f, Point::scalar(y));
    if (!a.finite()) return std::numeric_limits<double>::infinity();
    ExtendedReal b = evaluate(g, Point::scalar(xs - y));
    if (!b.finite()) return std::numeric_limits<double>::infinity();
    return a.value() + b.value();
  };
  double best = std::numeric_limits<double>::infinity(), arg = grid.lo;
  for (int i = 0; i < grid.n; ++i) {
    double y = grid.lo + (grid.hi - grid.lo) * i / (grid.n - 1);
    double v = at(y);
    if (v < best) {
      best = v;
      arg = y;
    }
  }
  if (!std::isfinite(best)) throw infinite_value("inf-convolution is +inf on the grid");
  double spacing = (grid.hi - grid.lo) / (grid.n - 1);
  for (int i = 0; i <= 20; ++i) {
    double y = arg - spacing + 2.0 * spacing * i / 20.0;
    best = std::min(best, at(y));
  }
  return best;
}

// f* tabulated on a 1-D grid of slopes. Building the table once makes
// repeated biconjugate queries cheap; unbounded nodes are kept as flags.
struct ConjugateTable {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> values;
  std::vector<bool> bounded;
};

inline ConjugateTable conjugate_table(const FunctionSpec& f, const Box& search_box,
                                      const ConjugateOptions& opts = {}) {
  if (f.dim != 1) throw dimension_mismatch("conjugate_table requires dim 1");
  ConjugateTable t;
  t.lo = search_box.lo[0];
  t.hi = search_box.hi[0];
  int n = opts.grid_points;
  t.values.resize(n, 0.0);
  t.bounded.resize(n, false);
  for (int i = 0; i < n; ++i) {
    double u = t.lo + (t.hi - t.lo) * i / (n - 1);
    ConjugateValue fu = conjugate_value(f, Point::scalar(u), search_box, opts);
    t.bounded[i] = fu.bounded;
    if (fu.bounded) t.values[i] = fu.value.value();
  }
  return t;
}

// f**(x) = sup_u x u - f*(u) over the tabulated slopes, skipping unbounded
// nodes. Agrees with f for convex f up to grid resolution.
inline double biconjugate_from_table(const ConjugateTable& t, double x) {
  double best = -std::numeric_limits<double>::infinity();
  bool any = false;
  std::size_t n = t.values.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!t.bounded[i]) continue;
    double u = t.lo + (t.hi - t.lo) * i / (n - 1);
    double v = x * u - t.values[i];
    if (!any || v > best) {
      best = v;
      any = true;
    }
  }
  if (!any) throw unbounded_conjugate("conjugate is +inf on the whole grid");
  return best;
}

inline double biconjugate_value(const FunctionSpec& f, const Point& x, const Box& search_box,
                                const ConjugateOptions& opts = {}) {
  require_point(f, x);
  ConjugateTable t = conjugate_table(f, search_box, opts);
  return biconjugate_from_table(t, x.scalar_value());
}

// | (g^gamma)*(x) - (g*(x) + gamma |x|^2 / 2) | for convex g.
inline double envelope_conjugate_identity_gap(const FunctionSpec& f, double gamma,
                                              const Point& x, const Box& search_box,
                                              const ConjugateOptions& opts = {}) {
  if (f.rho > 0.0)
    throw std::invalid_argument("envelope conjugate identity requires a convex function");
  FunctionSpec env = envelope_as_function(f, gamma);
  ConjugateValue lhs = conjugate_value(env, x, search_box, opts);
  ConjugateValue rhs = conjugate_value(f, x, search_box, opts);
  if (!lhs.bounded || !rhs.bounded)
    throw unbounded_conjugate("conjugate is +inf at x");
  return std::abs(lhs.value.value() - (rhs.value.value() + 0.5 * gamma * squared_norm(x)));
}

}  // namespace moreau
