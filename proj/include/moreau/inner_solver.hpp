#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "point.hpp"

namespace moreau {

enum class SolveMethod { gradient, unimodal_1d, analytic };

struct SolveCertificate {
  Point minimizer;
  double residual = 0.0;  // gradient norm, or bracket width in derivative-free mode
  int iterations = 0;
  SolveMethod method = SolveMethod::gradient;
  bool converged = true;
};

struct SolveOptions {
  double tol = 1e-10;
  int max_iter = 10000;
  // Upper curvature bound; fixes the step at 1/bound. Without it the solver
  // backtracks by halving from step0 and lets the step regrow afterwards.
  std::optional<double> curvature_bound;
  double step0 = 1.0;
};

// Gradient descent on a mu-strongly convex differentiable objective.
// Acceptance is Armijo on the objective while the predicted decrease is
// resolvable in floating point; below that resolution the objective carries
// no information, so acceptance switches to gradient-norm contraction, which
// stays accurate down to the tolerance.
inline SolveCertificate minimize_strongly_convex(
    const std::function<double(const Point&)>& value,
    const std::function<Point(const Point&)>& grad, double mu, const Point& x0,
    const SolveOptions& opts = {}) {
  if (mu <= 0.0) throw std::invalid_argument("mu must be positive");
  if (!value || !grad) throw std::invalid_argument("value and gradient oracles required");

  Point x = x0;
  double fx = value(x);
  if (!std::isfinite(fx)) throw solve_failure("objective not finite at start point");

  double t = opts.curvature_bound ? 1.0 / *opts.curvature_bound : opts.step0;
  std::optional<Point> g_next;
  int k = 0;
  for (; k < opts.max_iter; ++k) {
    Point g = g_next ? *g_next : grad(x);
    g_next.reset();
    double gn = norm(g);
    if (gn <= opts.tol)
      return {x, gn, k, SolveMethod::gradient, true};

    if (opts.curvature_bound) t = 1.0 / *opts.curvature_bound;
    double slack = 1e-15 * std::max(1.0, std::abs(fx));
    bool stepped = false;
    for (int halvings = 0; halvings < 64 && !stepped; ++halvings) {
      Point cand = x + (-t) * g;
      double fc = value(cand);
      if (std::isfinite(fc)) {
        if (0.5 * t * gn * gn > slack) {
          stepped = fc <= fx - 0.5 * t * gn * gn + slack;
        } else if (fc <= fx + slack) {
          try {
            Point gc = grad(cand);
            if (norm(gc) <= (1.0 - 0.25 * t * mu) * gn) {
              stepped = true;
              g_next = gc;
            }
          } catch (const gradient_unavailable&) {
          }
        }
      }
      if (stepped) {
        x = cand;
        fx = fc;
      } else {
        t *= 0.5;
      }
    }
    if (!stepped)
      return {x, gn, k, SolveMethod::gradient, false};
    if (!opts.curvature_bound) t *= 2.0;
  }
  return {x, norm(grad(x)), k, SolveMethod::gradient, false};
}

// Trisection on a strictly unimodal 1-D objective over [lo, hi]. The bracket
// must contain the minimizer; a 5-point scan rejects brackets whose value
// pattern is incompatible with unimodality. Values may be +inf as long as the
// scan sees at least one finite value.
inline SolveCertificate minimize_unimodal_1d(const std::function<double(double)>& value,
                                             double lo, double hi, double tol = 1e-10,
                                             int max_iter = 10000) {
  if (!(lo < hi)) throw invalid_bracket("bracket is empty");
  if (tol <= 0.0) throw std::invalid_argument("tol must be positive");

  double best_x = lo;
  double best_v = std::numeric_limits<double>::infinity();
  auto eval = [&](double y) {
    double v = value(y);
    if (std::isnan(v)) throw solve_failure("objective returned NaN");
    if (v < best_v) {
      best_v = v;
      best_x = y;
    }
    return v;
  };

  // Descent-pattern scan: values must fall (weakly) to the minimum and rise
  // after it.
  {
    const int n = 5;
    double vs[n];
    int arg = 0;
    for (int i = 0; i < n; ++i) {
      double yi = lo + (hi - lo) * i / (n - 1);
      vs[i] = eval(yi);
      if (vs[i] < vs[arg]) arg = i;
    }
    if (!std::isfinite(vs[arg])) throw invalid_bracket("objective is +inf on bracket");
    auto leq = [](double a, double b) {
      double s = 1e-12 * (1.0 + std::min(std::abs(a), std::abs(b)));
      return a <= b + s;
    };
    for (int i = 0; i < arg; ++i)
      if (!leq(vs[i + 1], vs[i])) throw invalid_bracket("no descent pattern on bracket");
    for (int i = arg; i < n - 1; ++i)
      if (!leq(vs[i], vs[i + 1])) throw invalid_bracket("no descent pattern on bracket");
  }

  int k = 0;
  while (hi - lo > tol && k < max_iter) {
    double w = (hi - lo) / 3.0;
    double m1 = lo + w, m2 = hi - w;
    if (eval(m1) <= eval(m2))
      hi = m2;
    else
      lo = m1;
    ++k;
  }
  return {Point::scalar(best_x), hi - lo, k, SolveMethod::unimodal_1d, hi - lo <= tol};
}

}  // namespace moreau
