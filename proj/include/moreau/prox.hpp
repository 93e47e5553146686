#pragma once

#include <cmath>
#include <functional>
#include <utility>

#include "function_spec.hpp"
#include "inner_solver.hpp"

namespace moreau {

// Admissibility guard band: gamma * rho <= 1 - 1e-9 keeps the prox
// subproblem (1/gamma - rho)-strongly convex with a usable margin.
inline constexpr double kGammaGuardBand = 1e-9;

inline void check_admissible(double rho, double gamma) {
  if (!(gamma > 0.0)) throw inadmissible_gamma("gamma must be positive");
  if (gamma * rho > 1.0 - kGammaGuardBand)
    throw inadmissible_gamma("gamma * rho must stay below 1");
}

struct ProxOptions {
  bool use_analytic = true;
  double tol = 1e-10;
  int max_iter = 10000;
  // Half-width scale of the derivative-free bracket [x - 2*gamma*G, x + 2*gamma*G].
  double growth_bound = 8.0;
};

struct ProxResult {
  Point input;
  double gamma = 0.0;
  Point point;
  SolveCertificate certificate;
};

namespace detail {

inline double prox_objective(const FunctionSpec& f, double gamma, const Point& x,
                             const Point& y) {
  ExtendedReal v = evaluate(f, y);
  if (!v.finite()) return v.value();
  return v.value() + squared_norm(x - y) / (2.0 * gamma);
}

inline ProxResult prox_numeric_gradient(const FunctionSpec& f, double gamma, const Point& x,
                                        const ProxOptions& opts) {
  auto value = [&f, gamma, &x](const Point& y) { return prox_objective(f, gamma, x, y); };
  auto grad = [&f, gamma, &x](const Point& y) { return f.gradient(y) + (1.0 / gamma) * (y - x); };
  double mu = 1.0 / gamma - f.rho;
  SolveOptions sopts;
  sopts.tol = opts.tol;
  sopts.max_iter = opts.max_iter;
  sopts.step0 = gamma;
  if (f.grad_lipschitz) sopts.curvature_bound = *f.grad_lipschitz + 1.0 / gamma;
  SolveCertificate cert = minimize_strongly_convex(value, grad, mu, x, sopts);
  if (!cert.converged) throw solve_failure("prox inner solve did not converge for " + f.name);
  return {x, gamma, cert.minimizer, cert};
}

inline ProxResult prox_numeric_bracket(const FunctionSpec& f, double gamma, const Point& x,
                                       const ProxOptions& opts) {
  if (f.dim != 1)
    throw solve_failure("derivative-free prox requires dim 1 for " + f.name);
  double c = x.scalar_value();
  double half = 2.0 * gamma * opts.growth_bound;
  double lo = c - half, hi = c + half;
  if (f.domain_box) {
    lo = std::max(lo, f.domain_box->lo[0]);
    hi = std::min(hi, f.domain_box->hi[0]);
    if (!(lo <= hi)) throw invalid_bracket("domain box is empty");
  }
  auto value = [&f, gamma, &x](double y) {
    return prox_objective(f, gamma, x, Point::scalar(y));
  };

  // Expand an unclipped side while the minimum sits on it.
  for (int tries = 0; tries < 60; ++tries) {
    const int n = 5;
    double arg = lo;
    double bestv = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      double yi = lo + (hi - lo) * i / (n - 1);
      double v = value(yi);
      if (v < bestv) {
        bestv = v;
        arg = yi;
      }
    }
    bool at_lo = arg == lo, at_hi = arg == hi;
    bool lo_clipped = f.domain_box && lo == f.domain_box->lo[0];
    bool hi_clipped = f.domain_box && hi == f.domain_box->hi[0];
    if (at_lo && !lo_clipped)
      lo = c - 2.0 * (c - lo);
    else if (at_hi && !hi_clipped)
      hi = c + 2.0 * (hi - c);
    else
      break;
    if (f.domain_box) {
      lo = std::max(lo, f.domain_box->lo[0]);
      hi = std::min(hi, f.domain_box->hi[0]);
    }
  }

  SolveCertificate cert = minimize_unimodal_1d(value, lo, hi, opts.tol, opts.max_iter);
  if (!cert.converged) throw solve_failure("prox bracket search did not converge for " + f.name);
  return {x, gamma, cert.minimizer, cert};
}

}  // namespace detail

// Prox_{gamma f}(x): unique minimizer of f(y) + |x - y|^2 / (2 gamma).
// Uses the analytic form when present, else gradient descent on the strongly
// convex subproblem, else a bracketed 1-D trisection. In dim 1 a stalled
// gradient solve (minimizer at a kink, where the gradient norm stays bounded
// away from zero) also falls back to the bracket.
inline ProxResult prox(const FunctionSpec& f, double gamma, const Point& x,
                       const ProxOptions& opts = {}) {
  check_admissible(f.rho, gamma);
  require_point(f, x);
  if (opts.use_analytic && f.analytic_prox) {
    Point p = f.analytic_prox(gamma, x);
    return {x, gamma, p, {p, 0.0, 0, SolveMethod::analytic, true}};
  }
  if (f.gradient) {
    try {
      return detail::prox_numeric_gradient(f, gamma, x, opts);
    } catch (const solve_failure&) {
      if (f.dim != 1) throw;
    } catch (const gradient_unavailable&) {
      if (f.dim != 1) throw;
    }
  }
  return detail::prox_numeric_bracket(f, gamma, x, opts);
}

// Prox via the convex-shift reduction:
//   Prox_{gamma f}(x) = Prox_{gamma' g_rho}(x / (1 - gamma rho)),
// with g_rho = f + (rho/2)|.|^2 and gamma' = gamma / (1 - gamma rho).
// For rho = 0 the reduction is the identity.
inline ProxResult prox_via_reduction(const FunctionSpec& f, double gamma, const Point& x,
                                     const ProxOptions& opts = {}) {
  check_admissible(f.rho, gamma);
  require_point(f, x);
  double s = 1.0 - gamma * f.rho;
  FunctionSpec g = shift_to_convex(f);
  ProxResult r = prox(g, gamma / s, (1.0 / s) * x, opts);
  return {x, gamma, r.point, r.certificate};
}

// | Prox_{gamma f}(x + gamma grad f(x)) - x |; zero in exact arithmetic.
inline double prox_inverse_residual(const FunctionSpec& f, double gamma, const Point& x,
                                    const ProxOptions& opts = {}) {
  check_admissible(f.rho, gamma);
  Point g = gradient(f, x);
  Point z = x + gamma * g;
  return distance(prox(f, gamma, z, opts).point, x);
}

// Moreau decomposition at gamma = 1: z = p + q with p = Prox_f(z) and
// q = Prox_{f*}(z). Requires declared convexity (rho <= 0).
inline std::pair<Point, Point> moreau_decomposition(const FunctionSpec& f, const Point& z,
                                                    const ProxOptions& opts = {}) {
  if (f.rho > 0.0)
    throw std::invalid_argument("moreau_decomposition requires a convex function");
  Point p = prox(f, 1.0, z, opts).point;
  return {p, z - p};
}

// Lipschitz constant 1 / (1 - gamma rho) of x -> Prox_{gamma f}(x).
inline double prox_lipschitz_constant(double rho, double gamma) {
  check_admissible(rho, gamma);
  return 1.0 / (1.0 - gamma * rho);
}

}  // namespace moreau
