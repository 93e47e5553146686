#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "errors.hpp"
#include "extended_real.hpp"
#include "point.hpp"
#include "sym_matrix.hpp"

namespace moreau {

// Oracle bundle for a rho-weakly convex function f : R^d -> R u {+inf}.
//
// rho is the declared weak-convexity modulus: f + (rho/2)|.|^2 is convex.
// rho < 0 means f is (-rho)-strongly convex; rho = 0 means convex. The
// modulus is declared, never inferred, and rho may be any real.
//
// value must never return -inf. gradient/hessian may be absent, and may throw
// gradient_unavailable/hessian_unavailable at flagged nondifferentiable
// points. analytic_prox/analytic_envelope, when present, are exact closed
// forms of the proximal map and Moreau envelope and take (gamma, x).
struct FunctionSpec {
  std::size_t dim = 1;
  std::function<ExtendedReal(const Point&)> value;
  std::function<Point(const Point&)> gradient;
  std::function<SymMatrix(const Point&)> hessian;
  double rho = 0.0;
  std::optional<Box> domain_box;
  std::function<Point(double, const Point&)> analytic_prox;
  std::function<double(double, const Point&)> analytic_envelope;
  std::optional<double> grad_lipschitz;
  std::string name;
};

inline void require_point(const FunctionSpec& f, const Point& x) {
  if (x.dim() != f.dim) throw dimension_mismatch("point dim does not match function dim");
  if (!x.all_finite()) throw infinite_value("point has non-finite coordinate");
}

inline ExtendedReal evaluate(const FunctionSpec& f, const Point& x) {
  require_point(f, x);
  if (f.domain_box && !f.domain_box->contains(x)) return ExtendedReal::infinity();
  return f.value(x);
}

inline Point gradient(const FunctionSpec& f, const Point& x) {
  require_point(f, x);
  if (!f.gradient) throw gradient_unavailable("no gradient oracle for " + f.name);
  if (f.domain_box && !f.domain_box->interior_contains(x, 1e-12))
    throw gradient_unavailable("point not in domain interior of " + f.name);
  return f.gradient(x);
}

inline SymMatrix hessian_at(const FunctionSpec& f, const Point& x) {
  require_point(f, x);
  if (!f.hessian) throw hessian_unavailable("no hessian oracle for " + f.name);
  return f.hessian(x);
}

// f(lx + (1-l)y) - l f(x) - (1-l) f(y) - (rho/2) l (1-l) |x - y|^2.
// Nonpositive everywhere iff f is rho-weakly convex.
inline double weak_convexity_residual(const FunctionSpec& f, const Point& x, const Point& y,
                                      double lambda) {
  if (lambda < 0.0 || lambda > 1.0)
    throw std::invalid_argument("lambda must lie in [0, 1]");
  Point m = lambda * x + (1.0 - lambda) * y;
  ExtendedReal fm = evaluate(f, m), fx = evaluate(f, x), fy = evaluate(f, y);
  if (!fm.finite() || !fx.finite() || !fy.finite())
    throw infinite_value("weak_convexity_residual hit +inf");
  double cap = 0.5 * f.rho * lambda * (1.0 - lambda) * squared_norm(x - y);
  return fm.value() - lambda * fx.value() - (1.0 - lambda) * fy.value() - cap;
}

// g_rho = f + (rho/2)|.|^2 with declared modulus 0. Analytic prox/envelope
// forms do not transport, so they are dropped. rho = 0 is the identity.
inline FunctionSpec shift_to_convex(const FunctionSpec& f) {
  if (f.rho == 0.0) return f;
  const double rho = f.rho;
  FunctionSpec g;
  g.dim = f.dim;
  g.rho = 0.0;
  g.domain_box = f.domain_box;
  g.name = f.name + "_shifted";
  FunctionSpec base = f;
  g.value = [base, rho](const Point& x) {
    return evaluate(base, x) + 0.5 * rho * squared_norm(x);
  };
  if (f.gradient) {
    g.gradient = [base, rho](const Point& x) { return base.gradient(x) + rho * x; };
  }
  if (f.hessian) {
    g.hessian = [base, rho](const Point& x) {
      SymMatrix h = base.hessian(x);
      SymMatrix out = h;
      for (std::size_t i = 0; i < h.dim(); ++i) out.set(i, i, h(i, i) + rho);
      return out;
    };
  }
  if (f.grad_lipschitz) g.grad_lipschitz = *f.grad_lipschitz + std::abs(rho);
  return g;
}

}  // namespace moreau
