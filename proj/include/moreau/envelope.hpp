#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "prox.hpp"

namespace moreau {

struct EnvelopeOptions {
  bool use_analytic = true;
  ProxOptions prox;

  ProxOptions prox_options() const {
    ProxOptions p = prox;
    p.use_analytic = use_analytic;
    return p;
  }
};

// g^gamma(x) = min_y g(y) + |x - y|^2 / (2 gamma).
inline double env_value(const FunctionSpec& f, double gamma, const Point& x,
                        const EnvelopeOptions& opts = {}) {
  check_admissible(f.rho, gamma);
  require_point(f, x);
  if (opts.use_analytic && f.analytic_envelope) return f.analytic_envelope(gamma, x);
  ProxResult r = prox(f, gamma, x, opts.prox_options());
  double fp = evaluate(f, r.point).value();
  return fp + squared_norm(x - r.point) / (2.0 * gamma);
}

// grad g^gamma(x) = (x - Prox_{gamma g}(x)) / gamma, which also equals
// grad g at the prox point.
inline Point env_gradient(const FunctionSpec& f, double gamma, const Point& x,
                          const EnvelopeOptions& opts = {}) {
  ProxResult r = prox(f, gamma, x, opts.prox_options());
  return (1.0 / gamma) * (x - r.point);
}

// d/dgamma g^gamma(x) = -|x - Prox_{gamma g}(x)|^2 / (2 gamma^2).
inline double env_dgamma(const FunctionSpec& f, double gamma, const Point& x,
                         const EnvelopeOptions& opts = {}) {
  ProxResult r = prox(f, gamma, x, opts.prox_options());
  return -squared_norm(x - r.point) / (2.0 * gamma * gamma);
}

// Hamilton-Jacobi defect | d/dgamma g^gamma + 0.5 |grad g^gamma|^2 |.
inline double hj_residual(const FunctionSpec& f, double gamma, const Point& x,
                          const EnvelopeOptions& opts = {}) {
  ProxResult r = prox(f, gamma, x, opts.prox_options());
  double dg = -squared_norm(x - r.point) / (2.0 * gamma * gamma);
  Point grad = (1.0 / gamma) * (x - r.point);
  return std::abs(dg + 0.5 * squared_norm(grad));
}

// hess g^gamma(x) = (1/gamma) (I - (I + gamma hess g(p))^{-1}) at p = prox.
// Only 1-D or diagonal curvature is inverted.
inline SymMatrix env_hessian(const FunctionSpec& f, double gamma, const Point& x,
                             const EnvelopeOptions& opts = {}) {
  ProxResult r = prox(f, gamma, x, opts.prox_options());
  SymMatrix h = hessian_at(f, r.point);
  if (h.dim() > 1 && !h.is_diagonal())
    throw hessian_unavailable("envelope hessian supports 1-D or diagonal curvature only");
  std::vector<double> d = h.diag();
  for (double& lam : d) {
    double denom = 1.0 + gamma * lam;
    if (denom <= 1e-12) throw singular_resolvent("1 + gamma * lambda is not positive");
    lam = (1.0 - 1.0 / denom) / gamma;
  }
  return SymMatrix::diagonal(d);
}

struct EnvModuli {
  double weak = 0.0;    // g^gamma is weak-convex with modulus rho / (1 - gamma rho)
  double strong = 0.0;  // |rho| / (1 + gamma |rho|) when rho < 0, else 0
  double smooth = 0.0;  // 1/gamma if gamma rho <= 1/2, else rho / (1 - gamma rho)
  std::optional<double> smooth_prox_image;  // 2 L_g on the prox image when gamma L_g <= 1/2
};

inline EnvModuli env_moduli(double rho, double gamma, std::optional<double> grad_lipschitz = {}) {
  check_admissible(rho, gamma);
  EnvModuli m;
  m.weak = rho / (1.0 - gamma * rho);
  m.strong = rho < 0.0 ? -m.weak : 0.0;
  m.smooth = gamma * rho <= 0.5 ? 1.0 / gamma : m.weak;
  if (grad_lipschitz && gamma * *grad_lipschitz <= 0.5)
    m.smooth_prox_image = 2.0 * *grad_lipschitz;
  return m;
}

// One prox solve feeding every pointwise envelope quantity.
struct EnvelopeReport {
  double gamma = 0.0;
  Point x;
  double value = 0.0;
  Point gradient;
  double dgamma = 0.0;
  std::optional<SymMatrix> hessian;
};

inline EnvelopeReport envelope_report(const FunctionSpec& f, double gamma, const Point& x,
                                      const EnvelopeOptions& opts = {}) {
  EnvelopeReport rep;
  rep.gamma = gamma;
  rep.x = x;
  rep.value = env_value(f, gamma, x, opts);
  ProxResult r = prox(f, gamma, x, opts.prox_options());
  rep.gradient = (1.0 / gamma) * (x - r.point);
  rep.dgamma = -squared_norm(x - r.point) / (2.0 * gamma * gamma);
  if (f.hessian) {
    try {
      rep.hessian = env_hessian(f, gamma, x, opts);
    } catch (const hessian_unavailable&) {
      // curvature jump at the prox; the rest of the report stands
    }
  }
  return rep;
}

struct MinimizeResult {
  Point point;
  int iterations = 0;
  bool converged = false;
  std::vector<Point> trace;
};

// Proximal-point iteration x_{k+1} = Prox_{gamma f}(x_k), equivalently
// gradient descent on g^gamma with step gamma. Stops when the step length
// falls below tol; the returned point then satisfies |grad g^gamma| <= tol/gamma.
inline MinimizeResult proximal_point_minimize(const FunctionSpec& f, double gamma,
                                              const Point& x0, double tol = 1e-8,
                                              int max_iter = 1000,
                                              const EnvelopeOptions& opts = {},
                                              bool record_trace = false) {
  check_admissible(f.rho, gamma);
  require_point(f, x0);
  Point x = x0;
  MinimizeResult out;
  if (record_trace) out.trace.push_back(x);
  for (int k = 1; k <= max_iter; ++k) {
    Point p = prox(f, gamma, x, opts.prox_options()).point;
    if (record_trace) out.trace.push_back(p);
    if (distance(p, x) <= tol) {
      out.point = x;
      out.iterations = k;
      out.converged = true;
      return out;
    }
    x = p;
  }
  out.point = x;
  out.iterations = max_iter;
  out.converged = false;
  return out;
}

struct GammaProfileRow {
  double gamma = 0.0;
  double env_value = 0.0;
  Point prox_point;
  double f_at_prox = 0.0;
};

struct GammaProfile {
  Point x;
  std::vector<GammaProfileRow> rows;
};

// Envelope and prox values over an ascending admissible gamma grid. Both
// env_value and f_at_prox are non-increasing in gamma; env_value tends to
// f(x) and prox to x as gamma -> 0.
inline GammaProfile compute_gamma_profile(const FunctionSpec& f, const Point& x,
                                          const std::vector<double>& gammas,
                                          const EnvelopeOptions& opts = {}) {
  if (gammas.empty()) throw std::invalid_argument("gamma grid is empty");
  for (std::size_t i = 0; i + 1 < gammas.size(); ++i)
    if (!(gammas[i] < gammas[i + 1]))
      throw std::invalid_argument("gamma grid must be sorted ascending");
  GammaProfile prof;
  prof.x = x;
  for (double g : gammas) {
    check_admissible(f.rho, g);
    ProxResult r = prox(f, g, x, opts.prox_options());
    double fp = evaluate(f, r.point).value();
    prof.rows.push_back({g, fp + squared_norm(x - r.point) / (2.0 * g), r.point, fp});
  }
  return prof;
}

// The envelope packaged as a FunctionSpec: value/gradient oracles plus the
// transported moduli. Useful for conjugates and convexity estimates of g^gamma.
inline FunctionSpec envelope_as_function(const FunctionSpec& f, double gamma,
                                         const EnvelopeOptions& opts = {}) {
  check_admissible(f.rho, gamma);
  EnvModuli m = env_moduli(f.rho, gamma, f.grad_lipschitz);
  FunctionSpec e;
  e.dim = f.dim;
  e.rho = m.weak;
  e.grad_lipschitz = m.smooth;
  e.name = f.name + "_env";
  FunctionSpec base = f;
  e.value = [base, gamma, opts](const Point& x) {
    return ExtendedReal(env_value(base, gamma, x, opts));
  };
  e.gradient = [base, gamma, opts](const Point& x) {
    return env_gradient(base, gamma, x, opts);
  };
  return e;
}

}  // namespace moreau
