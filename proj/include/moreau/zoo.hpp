#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "csv.hpp"
#include "envelope.hpp"
#include "function_spec.hpp"
#include "property_report.hpp"
#include "prox.hpp"

namespace moreau {

// A zoo member: oracle bundle plus the metadata tests lean on. gamma_cap is
// the largest gamma the test suites use for this member (0.98 / rho for
// weakly convex members, otherwise 2).
struct ZooEntry {
  FunctionSpec spec;
  std::vector<Point> critical_points;
  std::vector<Point> minimizers;
  std::optional<double> min_value;
  std::optional<double> smoothness;  // global Lipschitz constant of the gradient
  Box sampling_box;
  double gamma_cap = 2.0;
};

namespace detail {

inline std::string format_params(const std::vector<double>& params) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) os << ",";
    os << params[i];
  }
  os << ")";
  return os.str();
}

inline double sgn(double x) { return x < 0.0 ? -1.0 : 1.0; }

inline ZooEntry make_zero() {
  ZooEntry e;
  e.spec.dim = 1;
  e.spec.rho = 0.0;
  e.spec.name = "zero";
  e.spec.value = [](const Point&) { return ExtendedReal(0.0); };
  e.spec.gradient = [](const Point& x) { return Point(x.dim(), 0.0); };
  e.spec.hessian = [](const Point& x) { return SymMatrix::diagonal(std::vector<double>(x.dim(), 0.0)); };
  e.spec.analytic_prox = [](double, const Point& x) { return x; };
  e.spec.analytic_envelope = [](double, const Point&) { return 0.0; };
  e.spec.grad_lipschitz = 0.0;
  e.critical_points = {Point::scalar(0.0)};
  e.minimizers = {Point::scalar(0.0)};
  e.min_value = 0.0;
  e.smoothness = 0.0;
  e.sampling_box = Box::cube(1, -2.0, 2.0);
  e.gamma_cap = 2.0;
  return e;
}

inline ZooEntry make_quadratic(double alpha) {
  ZooEntry e;
  e.spec.dim = 1;
  e.spec.rho = -alpha;  // tight modulus: negative for strongly convex alpha > 0
  e.spec.name = "quadratic" + format_params({alpha});
  e.spec.value = [alpha](const Point& x) { return ExtendedReal(0.5 * alpha * squared_norm(x)); };
  e.spec.gradient = [alpha](const Point& x) { return alpha * x; };
  e.spec.hessian = [alpha](const Point& x) {
    return SymMatrix::diagonal(std::vector<double>(x.dim(), alpha));
  };
  e.spec.analytic_prox = [alpha](double g, const Point& x) { return (1.0 / (1.0 + g * alpha)) * x; };
  e.spec.analytic_envelope = [alpha](double g, const Point& x) {
    return 0.5 * alpha * squared_norm(x) / (1.0 + g * alpha);
  };
  e.spec.grad_lipschitz = std::abs(alpha);
  e.critical_points = {Point::scalar(0.0)};
  if (alpha > 0.0) {
    e.minimizers = {Point::scalar(0.0)};
    e.min_value = 0.0;
  }
  e.smoothness = std::abs(alpha);
  e.sampling_box = Box::cube(1, -2.0, 2.0);
  e.gamma_cap = e.spec.rho > 0.0 ? 0.98 / e.spec.rho : 2.0;
  return e;
}

inline ZooEntry make_absolute_value() {
  ZooEntry e;
  e.spec.dim = 1;
  e.spec.rho = 0.0;
  e.spec.name = "absolute_value";
  e.spec.value = [](const Point& x) { return ExtendedReal(std::abs(x.scalar_value())); };
  e.spec.gradient = [](const Point& x) {
    double v = x.scalar_value();
    if (std::abs(v) <= 1e-12) throw gradient_unavailable("absolute_value kink at 0");
    return Point::scalar(sgn(v));
  };
  e.spec.analytic_prox = [](double g, const Point& x) {
    double v = x.scalar_value();
    return Point::scalar(sgn(v) * std::max(std::abs(v) - g, 0.0));
  };
  e.spec.analytic_envelope = [](double g, const Point& x) {
    double v = std::abs(x.scalar_value());
    return v <= g ? v * v / (2.0 * g) : v - 0.5 * g;  // Huber
  };
  e.critical_points = {Point::scalar(0.0)};
  e.minimizers = {Point::scalar(0.0)};
  e.min_value = 0.0;
  e.sampling_box = Box::cube(1, -2.0, 2.0);
  e.gamma_cap = 2.0;
  return e;
}

// Piecewise C^1 two-well example: 1/2 - x^2 on |x| <= 1/2, (|x| - 1)^2
// outside. 2-weakly convex; critical points {-1, 0, 1}, minimizers {-1, 1}.
inline ZooEntry make_paper_h() {
  ZooEntry e;
  e.spec.dim = 1;
  e.spec.rho = 2.0;
  e.spec.name = "paper_h";
  e.spec.value = [](const Point& x) {
    double v = std::abs(x.scalar_value());
    return ExtendedReal(v <= 0.5 ? 0.5 - v * v : (v - 1.0) * (v - 1.0));
  };
  e.spec.gradient = [](const Point& x) {
    double v = x.scalar_value();
    if (std::abs(v) <= 0.5) return Point::scalar(-2.0 * v);
    return Point::scalar(2.0 * (std::abs(v) - 1.0) * sgn(v));
  };
  e.spec.hessian = [](const Point& x) {
    double a = std::abs(x.scalar_value());
    if (std::abs(a - 0.5) <= 1e-12)
      throw hessian_unavailable("paper_h curvature jump at |x| = 1/2");
    return SymMatrix::scalar1d(a < 0.5 ? -2.0 : 2.0);
  };
  e.spec.analytic_prox = [](double g, const Point& x) {
    double v = x.scalar_value();
    double t = 0.5 - g;
    if (std::abs(v) <= t) return Point::scalar(v / (1.0 - 2.0 * g));
    if (v >= t) return Point::scalar((v + 2.0 * g) / (1.0 + 2.0 * g));
    return Point::scalar((v - 2.0 * g) / (1.0 + 2.0 * g));
  };
  e.spec.analytic_envelope = [](double g, const Point& x) {
    double v = std::abs(x.scalar_value());
    if (v <= 0.5 - g) return 0.5 - v * v / (1.0 - 2.0 * g);
    return (v - 1.0) * (v - 1.0) / (1.0 + 2.0 * g);
  };
  e.spec.grad_lipschitz = 2.0;
  e.critical_points = {Point::scalar(-1.0), Point::scalar(0.0), Point::scalar(1.0)};
  e.minimizers = {Point::scalar(-1.0), Point::scalar(1.0)};
  e.min_value = 0.0;
  e.smoothness = 2.0;
  e.sampling_box = Box::cube(1, -2.0, 2.0);
  e.gamma_cap = 0.49;
  return e;
}

inline ZooEntry make_indicator(double a, double b) {
  if (a > b) throw std::invalid_argument("indicator requires a <= b");
  ZooEntry e;
  e.spec.dim = 1;
  e.spec.rho = 0.0;
  e.spec.name = "indicator" + format_params({a, b});
  e.spec.domain_box = Box{Point::scalar(a), Point::scalar(b)};
  e.spec.value = [](const Point&) { return ExtendedReal(0.0); };
  e.spec.gradient = [](const Point& x) { return Point(x.dim(), 0.0); };
  e.spec.analytic_prox = [a, b](double, const Point& x) {
    return Point::scalar(std::min(std::max(x.scalar_value(), a), b));
  };
  e.spec.analytic_envelope = [a, b](double g, const Point& x) {
    double v = x.scalar_value();
    double d = v < a ? a - v : (v > b ? v - b : 0.0);
    return d * d / (2.0 * g);
  };
  double mid = 0.5 * (a + b);
  e.critical_points = {Point::scalar(mid)};
  e.minimizers = {Point::scalar(mid)};
  e.min_value = 0.0;
  e.sampling_box = Box{Point::scalar(a), Point::scalar(b)};
  e.gamma_cap = 2.0;
  return e;
}

// (x^2 - 1)^2: 4-weakly convex, no global gradient Lipschitz bound, no
// closed-form prox. Exercises the numeric paths.
inline ZooEntry make_double_well() {
  ZooEntry e;
  e.spec.dim = 1;
  e.spec.rho = 4.0;
  e.spec.name = "double_well";
  e.spec.value = [](const Point& x) {
    double v = x.scalar_value();
    double w = v * v - 1.0;
    return ExtendedReal(w * w);
  };
  e.spec.gradient = [](const Point& x) {
    double v = x.scalar_value();
    return Point::scalar(4.0 * v * (v * v - 1.0));
  };
  e.spec.hessian = [](const Point& x) {
    double v = x.scalar_value();
    return SymMatrix::scalar1d(12.0 * v * v - 4.0);
  };
  e.critical_points = {Point::scalar(-1.0), Point::scalar(0.0), Point::scalar(1.0)};
  e.minimizers = {Point::scalar(-1.0), Point::scalar(1.0)};
  e.min_value = 0.0;
  e.sampling_box = Box::cube(1, -2.0, 2.0);
  e.gamma_cap = 0.98 / 4.0;
  return e;
}

inline ZooEntry make_diag_quadratic(const std::vector<double>& alphas) {
  if (alphas.empty()) throw std::invalid_argument("diag_quadratic needs at least one curvature");
  ZooEntry e;
  std::size_t d = alphas.size();
  double amin = alphas[0], amax_abs = std::abs(alphas[0]);
  for (double a : alphas) {
    amin = std::min(amin, a);
    amax_abs = std::max(amax_abs, std::abs(a));
  }
  e.spec.dim = d;
  e.spec.rho = -amin;
  e.spec.name = "diag_quadratic" + format_params(alphas);
  e.spec.value = [alphas](const Point& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < alphas.size(); ++i) s += 0.5 * alphas[i] * x[i] * x[i];
    return ExtendedReal(s);
  };
  e.spec.gradient = [alphas](const Point& x) {
    Point g(alphas.size());
    for (std::size_t i = 0; i < alphas.size(); ++i) g[i] = alphas[i] * x[i];
    return g;
  };
  e.spec.hessian = [alphas](const Point&) { return SymMatrix::diagonal(alphas); };
  e.spec.analytic_prox = [alphas](double g, const Point& x) {
    Point p(alphas.size());
    for (std::size_t i = 0; i < alphas.size(); ++i) p[i] = x[i] / (1.0 + g * alphas[i]);
    return p;
  };
  e.spec.analytic_envelope = [alphas](double g, const Point& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < alphas.size(); ++i)
      s += 0.5 * alphas[i] * x[i] * x[i] / (1.0 + g * alphas[i]);
    return s;
  };
  e.spec.grad_lipschitz = amax_abs;
  e.critical_points = {Point(d, 0.0)};
  if (amin > 0.0) {
    e.minimizers = {Point(d, 0.0)};
    e.min_value = 0.0;
  }
  e.smoothness = amax_abs;
  e.sampling_box = Box::cube(d, -2.0, 2.0);
  e.gamma_cap = e.spec.rho > 0.0 ? 0.98 / e.spec.rho : 2.0;
  return e;
}

}  // namespace detail

inline ZooEntry make_function(const std::string& name, const std::vector<double>& params = {}) {
  auto want = [&](std::size_t n) {
    if (params.size() != n)
      throw std::invalid_argument(name + " expects " + std::to_string(n) + " parameter(s)");
  };
  if (name == "zero") {
    want(0);
    return detail::make_zero();
  }
  if (name == "quadratic") {
    want(1);
    return detail::make_quadratic(params[0]);
  }
  if (name == "absolute_value") {
    want(0);
    return detail::make_absolute_value();
  }
  if (name == "paper_h") {
    want(0);
    return detail::make_paper_h();
  }
  if (name == "indicator") {
    want(2);
    return detail::make_indicator(params[0], params[1]);
  }
  if (name == "double_well") {
    want(0);
    return detail::make_double_well();
  }
  if (name == "diag_quadratic") {
    if (params.empty()) throw std::invalid_argument("diag_quadratic needs curvatures");
    return detail::make_diag_quadratic(params);
  }
  throw std::invalid_argument("unknown function: " + name);
}

inline std::vector<ZooEntry> default_zoo() {
  return {make_function("zero"),
          make_function("quadratic", {2.0}),
          make_function("quadratic", {-1.0}),
          make_function("absolute_value"),
          make_function("paper_h"),
          make_function("indicator", {0.0, 1.0}),
          make_function("double_well"),
          make_function("diag_quadratic", {0.5, 2.0, 5.0})};
}

// Runs the numeric prox/envelope path against the analytic forms and records
// the absolute errors, one row per available closed form.
inline std::vector<PropertyRow> oracle_crosscheck(const ZooEntry& entry, double gamma,
                                                  const Point& x, double prox_tol,
                                                  double env_tol) {
  std::vector<PropertyRow> rows;
  EnvelopeOptions numeric;
  numeric.use_analytic = false;
  if (entry.spec.analytic_prox) {
    Point analytic = entry.spec.analytic_prox(gamma, x);
    Point numeric_p = prox(entry.spec, gamma, x, numeric.prox_options()).point;
    rows.push_back(make_row("zoo", "oracle_crosscheck/" + entry.spec.name + "/prox@" + csv::format(gamma), 1,
                            distance(analytic, numeric_p), prox_tol));
  }
  if (entry.spec.analytic_envelope) {
    double analytic = entry.spec.analytic_envelope(gamma, x);
    double numeric_e = env_value(entry.spec, gamma, x, numeric);
    rows.push_back(make_row("zoo", "oracle_crosscheck/" + entry.spec.name + "/env@" + csv::format(gamma), 1,
                            std::abs(analytic - numeric_e), env_tol));
  }
  return rows;
}

}  // namespace moreau
