#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "conjugate.hpp"
#include "csv.hpp"
#include "envelope.hpp"
#include "finite_diff.hpp"
#include "function_spec.hpp"
#include "nc_criterion.hpp"
#include "property_report.hpp"
#include "prox.hpp"
#include "rng.hpp"
#include "zoo.hpp"

namespace moreau {

// base_tol applies only to contracts the suites leave unpinned (fixed-point
// and duality identities). Inequality caps and finite-difference tolerances
// are pinned where each row is built.
struct CheckConfig {
  std::uint64_t seed = 42;
  double base_tol = 1e-8;
};

namespace detail {

inline Box inflate(const Box& b, double m) {
  Point lo(b.dim()), hi(b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i) {
    lo[i] = b.lo[i] - m;
    hi[i] = b.hi[i] + m;
  }
  return Box{lo, hi};
}

// Middle of the admissible gamma range for a member, scaled by t in (0, 1).
inline double pick_gamma(const ZooEntry& e, double t) { return t * e.gamma_cap; }

// Central difference with a step-halving consistency probe. Disagreement
// flags a nearby curvature jump or domain edge; callers resample.
inline std::optional<double> stable_central(const std::function<double(double)>& f, double t) {
  double d1 = fd::central(f, t);
  double d2 = fd::central(f, t, 0.5 * fd::step1(t));
  if (!std::isfinite(d1) || !std::isfinite(d2)) return std::nullopt;
  if (std::abs(d1 - d2) > 1e-7 * std::max(1.0, std::abs(d2))) return std::nullopt;
  return d2;
}

inline std::optional<Point> stable_gradient(const std::function<double(const Point&)>& f,
                                            const Point& x) {
  Point g(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    auto slice = [&](double t) {
      Point z = x;
      z[i] = t;
      return f(z);
    };
    auto d = stable_central(slice, x[i]);
    if (!d) return std::nullopt;
    g[i] = *d;
  }
  return g;
}

inline double finite_or_inf(const ExtendedReal& v) {
  return v.finite() ? v.value() : std::numeric_limits<double>::infinity();
}

}  // namespace detail

// Weak-convexity algebra: residual caps, gradient/Hessian curvature bounds,
// finite-difference agreement of the gradient oracles, and the convex shift.
inline std::vector<PropertyRow> func_model_suite(const CheckConfig& cfg) {
  std::vector<PropertyRow> rows;
  Rng rng(cfg.seed ^ 0x66756e63ULL);
  for (const ZooEntry& e : default_zoo()) {
    const FunctionSpec& f = e.spec;
    const Box& box = e.sampling_box;

    {
      double worst = -std::numeric_limits<double>::infinity();
      for (int s = 0; s < 1000; ++s) {
        Point x = rng.point_in(box), y = rng.point_in(box);
        worst = std::max(worst, weak_convexity_residual(f, x, y, rng.uniform01()));
      }
      rows.push_back(make_row("func_model", "residual/" + f.name, 1000, worst, 1e-9));
    }

    {
      FunctionSpec g = shift_to_convex(f);
      double worst = -std::numeric_limits<double>::infinity();
      for (int s = 0; s < 500; ++s) {
        Point x = rng.point_in(box), y = rng.point_in(box);
        worst = std::max(worst, weak_convexity_residual(g, x, y, rng.uniform01()));
      }
      rows.push_back(make_row("func_model", "shift_convex/" + f.name, 500, worst, 1e-9));
    }

    if (f.gradient) {
      auto val = [&f](const Point& z) { return detail::finite_or_inf(evaluate(f, z)); };
      double worst = 0.0;
      int accepted = 0, attempts = 0;
      while (accepted < 100 && attempts < 100000) {
        ++attempts;
        Point x = rng.point_in(box);
        Point g;
        try {
          g = gradient(f, x);
        } catch (const gradient_unavailable&) {
          continue;
        }
        auto fdg = detail::stable_gradient(val, x);
        if (!fdg) continue;
        worst = std::max(worst, distance(g, *fdg) / (1.0 + norm(g)));
        ++accepted;
      }
      rows.push_back(make_row("func_model", "grad_fd/" + f.name, accepted, worst, 1e-5));

      double mono = -std::numeric_limits<double>::infinity();
      int pairs = 0;
      while (pairs < 1000) {
        Point x = rng.point_in(box), y = rng.point_in(box);
        Point gx, gy;
        try {
          gx = gradient(f, x);
          gy = gradient(f, y);
        } catch (const gradient_unavailable&) {
          continue;
        }
        mono = std::max(mono, -f.rho * squared_norm(x - y) - dot(x - y, gx - gy));
        ++pairs;
      }
      rows.push_back(make_row("func_model", "grad_monotone/" + f.name, pairs, mono, 1e-9));
    }

    if (f.hessian) {
      double worst = -std::numeric_limits<double>::infinity();
      int accepted = 0;
      while (accepted < 500) {
        Point x = rng.point_in(box);
        SymMatrix h;
        try {
          h = hessian_at(f, x);
        } catch (const hessian_unavailable&) {
          continue;
        }
        Point v(f.dim);
        double n2 = 0.0;
        do {
          for (std::size_t i = 0; i < f.dim; ++i) v[i] = rng.uniform(-1.0, 1.0);
          n2 = squared_norm(v);
        } while (n2 < 1e-4);
        v = (1.0 / std::sqrt(n2)) * v;
        worst = std::max(worst, -f.rho - h.quadratic_form(v));
        ++accepted;
      }
      rows.push_back(make_row("func_model", "hessian_bound/" + f.name, accepted, worst, 1e-9));
    }
  }
  return rows;
}

// Solver-level contracts: uniqueness of the strongly convex minimizer,
// monotone descent, and the iteration budget on quadratics.
inline std::vector<PropertyRow> inner_solver_suite(const CheckConfig& cfg) {
  std::vector<PropertyRow> rows;
  Rng rng(cfg.seed ^ 0x736f6c76ULL);

  struct Case {
    const char* label;
    ZooEntry entry;
    double gamma;
  };
  std::vector<Case> cases{{"paper_h", make_function("paper_h"), 0.25},
                          {"double_well", make_function("double_well"), 0.2}};
  for (const Case& c : cases) {
    const FunctionSpec& f = c.entry.spec;
    double mu = 1.0 / c.gamma - f.rho;
    double worst = 0.0, descent = -std::numeric_limits<double>::infinity();
    for (int s = 0; s < 20; ++s) {
      Point x = rng.point_in(c.entry.sampling_box);
      auto value = [&](const Point& y) {
        return detail::finite_or_inf(evaluate(f, y)) + squared_norm(x - y) / (2.0 * c.gamma);
      };
      auto grad = [&](const Point& y) { return f.gradient(y) + (1.0 / c.gamma) * (y - x); };
      Point alt = x + Point{0.7};
      SolveCertificate a = minimize_strongly_convex(value, grad, mu, x);
      SolveCertificate b = minimize_strongly_convex(value, grad, mu, alt);
      worst = std::max(worst, distance(a.minimizer, b.minimizer));
      descent = std::max(descent, value(a.minimizer) - value(x));
      descent = std::max(descent, value(b.minimizer) - value(alt));
    }
    rows.push_back(make_row("inner_solver", std::string("uniqueness/") + c.label, 20, worst,
                            2.0 * 1e-10 / mu));
    rows.push_back(
        make_row("inner_solver", std::string("descent/") + c.label, 40, descent, 1e-11));
  }

  {
    int worst_iters = 0;
    for (int s = 0; s < 20; ++s) {
      double alpha = rng.uniform(-1.0, 4.0);
      double gamma = rng.uniform(0.05, 0.45);
      Point x = Point::scalar(rng.uniform(-2.0, 2.0));
      auto value = [&](const Point& y) {
        return 0.5 * alpha * squared_norm(y) + squared_norm(x - y) / (2.0 * gamma);
      };
      auto grad = [&](const Point& y) { return alpha * y + (1.0 / gamma) * (y - x); };
      SolveCertificate cert = minimize_strongly_convex(value, grad, alpha + 1.0 / gamma, x);
      if (!cert.converged) worst_iters = 1 << 20;
      worst_iters = std::max(worst_iters, cert.iterations);
    }
    rows.push_back(make_row("inner_solver", "quadratic_iters", 20,
                            static_cast<double>(worst_iters), 200.0));
  }
  return rows;
}

// Prox-level inequalities and identities: cocoercivity, Lipschitz bound, the
// inner strong-convexity inequality, convex-shift reduction agreement,
// monotone f(prox) in gamma, and the gradient-step inverse identity.
inline std::vector<PropertyRow> prox_engine_suite(const CheckConfig& cfg) {
  std::vector<PropertyRow> rows;
  Rng rng(cfg.seed ^ 0x70726f78ULL);
  for (const ZooEntry& e : default_zoo()) {
    const FunctionSpec& f = e.spec;
    double gamma = detail::pick_gamma(e, 0.5);
    Box wide = detail::inflate(e.sampling_box, 1.0);

    {
      double coco = -std::numeric_limits<double>::infinity();
      double lip = -std::numeric_limits<double>::infinity();
      double denom = 1.0 - gamma * f.rho;
      for (int s = 0; s < 10000; ++s) {
        Point x = rng.point_in(wide), y = rng.point_in(wide);
        Point p = prox(f, gamma, x).point, q = prox(f, gamma, y).point;
        coco = std::max(coco, squared_norm(p - q) - dot(x - y, p - q) / denom);
        lip = std::max(lip, distance(p, q) - distance(x, y) / denom);
      }
      rows.push_back(make_row("prox_engine", "cocoercivity/" + f.name, 10000, coco, 1e-9));
      rows.push_back(make_row("prox_engine", "lipschitz/" + f.name, 10000, lip, 1e-9));
    }

    {
      double worst = -std::numeric_limits<double>::infinity();
      for (int s = 0; s < 2000; ++s) {
        Point x = rng.point_in(wide), y = rng.point_in(e.sampling_box);
        Point p = prox(f, gamma, x).point;
        double gp = detail::finite_or_inf(evaluate(f, p));
        double gy = detail::finite_or_inf(evaluate(f, y));
        worst = std::max(worst, gp + dot(x - p, y - p) / gamma - gy -
                                    0.5 * f.rho * squared_norm(y - p));
      }
      rows.push_back(make_row("prox_engine", "technical/" + f.name, 2000, worst, 1e-9));
    }

    {
      double worst = 0.0;
      std::vector<double> grid{0.1 * e.gamma_cap, 0.5 * e.gamma_cap, 0.9 * e.gamma_cap};
      for (double g : grid)
        for (int s = 0; s < 50; ++s) {
          Point x = rng.point_in(e.sampling_box);
          worst = std::max(worst,
                           distance(prox(f, g, x).point, prox_via_reduction(f, g, x).point));
        }
      rows.push_back(
          make_row("prox_engine", "reduction/" + f.name, 150, worst, 1e-7));
    }

    {
      double worst = -std::numeric_limits<double>::infinity();
      std::vector<double> grid;
      for (int i = 0; i < 10; ++i)
        grid.push_back(std::exp(std::log(1e-4) + i / 9.0 * std::log(0.95 * e.gamma_cap / 1e-4)));
      for (int s = 0; s < 20; ++s) {
        Point x = rng.point_in(e.sampling_box);
        GammaProfile prof = compute_gamma_profile(f, x, grid);
        for (std::size_t i = 0; i + 1 < prof.rows.size(); ++i)
          worst = std::max(worst, prof.rows[i + 1].f_at_prox - prof.rows[i].f_at_prox);
      }
      rows.push_back(make_row("prox_engine", "prox_value_monotone/" + f.name, 20, worst, 1e-9));
    }

    if (f.gradient && !f.domain_box && f.name != "absolute_value") {
      double worst = 0.0;
      for (int s = 0; s < 1000; ++s) {
        Point x = rng.point_in(e.sampling_box);
        worst = std::max(worst, prox_inverse_residual(f, gamma, x));
      }
      rows.push_back(make_row("prox_engine", "inverse_identity/" + f.name, 1000, worst, 1e-7));
    }

    if (f.rho <= 0.0) {
      double worst = 0.0;
      Box cbox = default_conjugate_box(f.dim);
      for (int s = 0; s < 200; ++s) {
        Point z = rng.point_in(wide);
        auto [p, q] = moreau_decomposition(f, z);
        worst = std::max(worst, norm(p + q - z));
        worst = std::max(worst, std::abs(fenchel_young_gap(f, p, q, cbox)));
      }
      rows.push_back(make_row("prox_engine", "decomposition/" + f.name, 200, worst, 1e-6));
    }
  }
  return rows;
}

// Envelope-level identities and regularity: gradient and HJ formulas,
// transported convexity moduli, smoothness, profiles in gamma, and behavior
// at critical points.
inline std::vector<PropertyRow> envelope_suite(const CheckConfig& cfg) {
  std::vector<PropertyRow> rows;
  Rng rng(cfg.seed ^ 0x656e7665ULL);
  for (const ZooEntry& e : default_zoo()) {
    const FunctionSpec& f = e.spec;
    Box ebox = detail::inflate(e.sampling_box, 0.5);

    {
      double worst = 0.0;
      int accepted = 0, attempts = 0;
      while (accepted < 100 && attempts < 100000) {
        ++attempts;
        double gamma = rng.uniform(0.02 * e.gamma_cap, 0.95 * e.gamma_cap);
        Point x = rng.point_in(ebox);
        Point g = env_gradient(f, gamma, x);
        auto val = [&](const Point& z) { return env_value(f, gamma, z); };
        auto fdg = detail::stable_gradient(val, x);
        if (!fdg) continue;
        worst = std::max(worst, distance(g, *fdg) / (1.0 + norm(g)));
        ++accepted;
      }
      rows.push_back(make_row("envelope", "grad_fd/" + f.name, accepted, worst, 1e-5));
    }

    if (f.gradient && !f.domain_box && f.name != "absolute_value") {
      double worst = 0.0;
      for (int s = 0; s < 200; ++s) {
        double gamma = rng.uniform(0.02 * e.gamma_cap, 0.95 * e.gamma_cap);
        Point x = rng.point_in(ebox);
        Point p = prox(f, gamma, x).point;
        worst = std::max(worst, distance(env_gradient(f, gamma, x), f.gradient(p)));
      }
      rows.push_back(make_row("envelope", "grad_matches_f/" + f.name, 200, worst, 1e-7));
    }

    {
      double gamma = detail::pick_gamma(e, 0.5);
      FunctionSpec env = envelope_as_function(f, gamma);
      double worst = -std::numeric_limits<double>::infinity();
      for (int s = 0; s < 500; ++s) {
        Point x = rng.point_in(ebox), y = rng.point_in(ebox);
        worst = std::max(worst, weak_convexity_residual(env, x, y, rng.uniform01()));
      }
      rows.push_back(make_row("envelope", "env_weak_convexity/" + f.name, 500, worst, 1e-9));
      if (f.rho <= 0.0) {
        FunctionSpec plain = env;
        plain.rho = 0.0;
        double cworst = -std::numeric_limits<double>::infinity();
        for (int s = 0; s < 500; ++s) {
          Point x = rng.point_in(ebox), y = rng.point_in(ebox);
          cworst = std::max(cworst, weak_convexity_residual(plain, x, y, rng.uniform01()));
        }
        rows.push_back(make_row("envelope", "env_convexity/" + f.name, 500, cworst, 1e-9));
      }
    }

    for (double t : {0.4, 0.8}) {
      double gamma = detail::pick_gamma(e, t);
      EnvModuli m = env_moduli(f.rho, gamma, f.grad_lipschitz);
      double ratio = 0.0;
      for (int s = 0; s < 10000; ++s) {
        Point x = rng.point_in(ebox), y = rng.point_in(ebox);
        double d = distance(x, y);
        if (d < 0.01) continue;
        ratio = std::max(ratio,
                         distance(env_gradient(f, gamma, x), env_gradient(f, gamma, y)) / d);
      }
      rows.push_back(make_row("envelope",
                              "grad_lipschitz/" + f.name + "@" + csv::format(gamma), 10000,
                              ratio, m.smooth + 1e-6));
    }

    {
      double worst = 0.0;
      for (int s = 0; s < 200; ++s) {
        double gamma = rng.uniform(0.02 * e.gamma_cap, 0.95 * e.gamma_cap);
        Point x = rng.point_in(ebox);
        worst = std::max(worst, hj_residual(f, gamma, x));
      }
      rows.push_back(make_row("envelope", "hj/" + f.name, 200, worst, 1e-8));
    }

    {
      std::vector<double> grid;
      for (int i = 0; i < 10; ++i)
        grid.push_back(std::exp(std::log(1e-4) + i / 9.0 * std::log(0.95 * e.gamma_cap / 1e-4)));
      double mono = -std::numeric_limits<double>::infinity();
      double upper = -std::numeric_limits<double>::infinity();
      double limit_env = 0.0, limit_prox = 0.0;
      for (int s = 0; s < 20; ++s) {
        Point x = rng.point_in(e.sampling_box);
        double fx = detail::finite_or_inf(evaluate(f, x));
        GammaProfile prof = compute_gamma_profile(f, x, grid);
        for (std::size_t i = 0; i + 1 < prof.rows.size(); ++i)
          mono = std::max(mono, prof.rows[i + 1].env_value - prof.rows[i].env_value);
        for (const auto& r : prof.rows) upper = std::max(upper, r.env_value - fx);
        limit_env = std::max(limit_env, fx - prof.rows.front().env_value);
        limit_prox = std::max(limit_prox, distance(prof.rows.front().prox_point, x));
      }
      rows.push_back(make_row("envelope", "env_monotone/" + f.name, 20, mono, 1e-10));
      rows.push_back(make_row("envelope", "env_below_f/" + f.name, 20, upper, 1e-12));
      rows.push_back(make_row("envelope", "gamma_limit_env/" + f.name, 20, limit_env, 0.03));
      rows.push_back(make_row("envelope", "gamma_limit_prox/" + f.name, 20, limit_prox, 0.05));
    }

    if (!e.critical_points.empty()) {
      double gamma = detail::pick_gamma(e, 0.5);
      double worst = 0.0;
      for (const Point& c : e.critical_points) {
        worst = std::max(worst, norm(env_gradient(f, gamma, c)));
        if (f.gradient) {
          try {
            worst = std::max(worst, norm(gradient(f, c)));
          } catch (const gradient_unavailable&) {
          }
        }
      }
      rows.push_back(make_row("envelope", "critical_points/" + f.name,
                              static_cast<long>(e.critical_points.size()), worst,
                              cfg.base_tol));
    }
  }

  {
    ZooEntry e = make_function("paper_h");
    const FunctionSpec& f = e.spec;
    double gamma = 0.25, mu = 1.0 / gamma - f.rho;
    double worst_eq = 0.0;
    for (const Point& c : e.critical_points) {
      Point p = prox(f, gamma, c).point;
      double fx = evaluate(f, c).value();
      worst_eq = std::max({worst_eq, distance(p, c), std::abs(env_value(f, gamma, c) - fx),
                           std::abs(evaluate(f, p).value() - fx)});
    }
    rows.push_back(make_row("envelope", "fixed_point_forward/paper_h", 3, worst_eq,
                            cfg.base_tol));

    double worst_conv = 0.0;
    long hits = 0;
    for (int i = 0; i <= 400; ++i) {
      Point x = Point::scalar(-2.0 + 4.0 * i / 400.0);
      double gap = evaluate(f, x).value() - env_value(f, gamma, x);
      if (gap <= cfg.base_tol) {
        ++hits;
        Point p = prox(f, gamma, x).point;
        worst_conv = std::max(worst_conv, squared_norm(x - p));
      }
    }
    rows.push_back(make_row("envelope", "fixed_point_converse/paper_h", hits, worst_conv,
                            2.0 * cfg.base_tol / mu));
  }

  {
    ZooEntry e = make_function("paper_h");
    double worst_err = 0.0;
    int worst_iters = 0;
    Rng starts(cfg.seed ^ 0x70706131ULL);
    int accepted = 0;
    while (accepted < 50) {
      double x0 = starts.uniform(-2.0, 2.0);
      if (std::abs(x0) <= 0.01) continue;
      ++accepted;
      MinimizeResult r = proximal_point_minimize(e.spec, 0.25, Point::scalar(x0), 1e-8, 200);
      double err = std::min(distance(r.point, Point::scalar(1.0)),
                            distance(r.point, Point::scalar(-1.0)));
      if (!r.converged) err = 1.0;
      worst_err = std::max(worst_err, err);
      worst_iters = std::max(worst_iters, r.iterations);
    }
    rows.push_back(make_row("envelope", "ppa_converges/paper_h", 50, worst_err, 1e-6));
    rows.push_back(make_row("envelope", "ppa_iters/paper_h", 50,
                            static_cast<double>(worst_iters), 200.0));
    MinimizeResult at0 = proximal_point_minimize(e.spec, 0.25, Point::scalar(0.0), 1e-8, 200);
    rows.push_back(make_row("envelope", "ppa_fixed0/paper_h", 1, norm(at0.point), 1e-12));
  }
  return rows;
}

// Conjugate-side facts: convexity of f*, biconjugation on convex members,
// gradient and smoothness duality for strongly convex members, the
// Fenchel-Young inequality, and the envelope conjugate identity.
inline std::vector<PropertyRow> conjugate_suite(const CheckConfig& cfg) {
  std::vector<PropertyRow> rows;
  Rng rng(cfg.seed ^ 0x636f6e6aULL);
  Box cbox = default_conjugate_box(1);

  for (const ZooEntry& e : default_zoo()) {
    const FunctionSpec& f = e.spec;
    if (f.dim != 1) continue;

    double span = f.name == "absolute_value" ? 1.2 : 3.0;
    auto conj_at = [&](double u) { return conjugate_value(f, Point::scalar(u), cbox); };

    {
      double worst = -std::numeric_limits<double>::infinity();
      int accepted = 0, attempts = 0;
      while (accepted < 200 && attempts < 4000) {
        ++attempts;
        double u = rng.uniform(-span, span), v = rng.uniform(-span, span);
        double lam = rng.uniform01();
        ConjugateValue a = conj_at(u), b = conj_at(v), m = conj_at(lam * u + (1.0 - lam) * v);
        if (!a.bounded || !b.bounded || !m.bounded) continue;
        worst = std::max(worst, m.value.value() - lam * a.value.value() -
                                    (1.0 - lam) * b.value.value());
        ++accepted;
      }
      if (accepted > 0)
        rows.push_back(
            make_row("conjugate", "conjugate_convex/" + f.name, accepted, worst, 1e-6));
    }

    if (f.rho <= 0.0) {
      ConjugateTable table = conjugate_table(f, cbox);
      double worst = 0.0;
      for (int s = 0; s < 100; ++s) {
        Point x = rng.point_in(e.sampling_box);
        double fx = detail::finite_or_inf(evaluate(f, x));
        worst = std::max(worst,
                         std::abs(biconjugate_from_table(table, x.scalar_value()) - fx));
      }
      rows.push_back(make_row("conjugate", "biconjugate/" + f.name, 100, worst, 1e-5));
    }

    {
      double worst = -std::numeric_limits<double>::infinity();
      int accepted = 0, attempts = 0;
      while (accepted < 200 && attempts < 4000) {
        ++attempts;
        Point x = rng.point_in(e.sampling_box);
        Point u = Point::scalar(rng.uniform(-span, span));
        if (!evaluate(f, x).finite()) continue;
        double gap;
        try {
          gap = fenchel_young_gap(f, x, u, cbox);
        } catch (const unbounded_conjugate&) {
          continue;
        }
        worst = std::max(worst, -gap);
        ++accepted;
      }
      if (accepted > 0)
        rows.push_back(
            make_row("conjugate", "fenchel_young/" + f.name, accepted, worst, 1e-6));
    }
  }

  for (const ZooEntry& e : default_zoo()) {
    const FunctionSpec& f = e.spec;
    if (!(f.rho < 0.0) || !f.gradient) continue;
    double worst = 0.0;
    for (int s = 0; s < 100; ++s) {
      Point x = rng.point_in(e.sampling_box);
      ConjugateValue c = conjugate_value(f, f.gradient(x), default_conjugate_box(f.dim));
      worst = std::max(worst, distance(*c.maximizer, x));
    }
    rows.push_back(make_row("conjugate", "grad_duality/" + f.name, 100, worst, cfg.base_tol));
  }

  {
    ZooEntry e = make_function("quadratic", {2.0});
    const FunctionSpec& f = e.spec;
    double ratio = 0.0;
    int accepted = 0;
    while (accepted < 200) {
      Point u = rng.point_in(Box::cube(1, -4.0, 4.0)), v = rng.point_in(Box::cube(1, -4.0, 4.0));
      if (distance(u, v) < 0.1) continue;
      ConjugateValue a = conjugate_value(f, u), b = conjugate_value(f, v);
      ratio = std::max(ratio, distance(*a.maximizer, *b.maximizer) / distance(u, v));
      ++accepted;
    }
    rows.push_back(make_row("conjugate", "smooth_duality/" + f.name, 200, ratio,
                            0.5 + cfg.base_tol));
  }

  {
    for (const char* name : {"absolute_value", "quadratic"}) {
      ZooEntry e = std::string(name) == "quadratic" ? make_function("quadratic", {2.0})
                                                    : make_function(name);
      const FunctionSpec& f = e.spec;
      double gamma = 0.25;
      double span = std::string(name) == "absolute_value" ? 0.9 : 2.0;
      double worst = 0.0;
      for (int s = 0; s < 20; ++s) {
        Point x = Point::scalar(rng.uniform(-span, span));
        worst = std::max(worst, envelope_conjugate_identity_gap(f, gamma, x, cbox));
      }
      rows.push_back(
          make_row("conjugate", "envelope_conjugate/" + f.name, 20, worst, 1e-4));
    }
  }
  return rows;
}

// Zoo-internal consistency: closed forms against the numeric path, the
// first-order condition of each analytic prox, and branch continuity of the
// piecewise envelope.
inline std::vector<PropertyRow> zoo_suite(const CheckConfig& cfg) {
  std::vector<PropertyRow> rows;
  Rng rng(cfg.seed ^ 0x7a6f6f21ULL);
  for (const ZooEntry& e : default_zoo()) {
    for (double t : {0.3, 0.8}) {
      double gamma = detail::pick_gamma(e, t);
      Point x = rng.point_in(e.sampling_box);
      for (PropertyRow& r : oracle_crosscheck(e, gamma, x, 1e-7, 1e-7))
        rows.push_back(std::move(r));
    }

    if (e.spec.analytic_prox && e.spec.gradient && !e.spec.domain_box &&
        e.spec.name != "absolute_value") {
      double worst = 0.0;
      for (int s = 0; s < 100; ++s) {
        double gamma = rng.uniform(0.05 * e.gamma_cap, 0.95 * e.gamma_cap);
        Point x = rng.point_in(e.sampling_box);
        Point p = e.spec.analytic_prox(gamma, x);
        worst = std::max(worst, norm((1.0 / gamma) * (p - x) + e.spec.gradient(p)));
      }
      rows.push_back(make_row("zoo", "first_order/" + e.spec.name, 100, worst, 1e-10));
    }
  }

  {
    ZooEntry e = make_function("paper_h");
    double worst = 0.0;
    for (double gamma : {0.01, 0.25, 0.49}) {
      double b = 0.5 - gamma;
      for (double sgn : {-1.0, 1.0}) {
        double left = e.spec.analytic_envelope(gamma, Point::scalar(sgn * (b - 1e-12)));
        double right = e.spec.analytic_envelope(gamma, Point::scalar(sgn * (b + 1e-12)));
        worst = std::max(worst, std::abs(left - right));
      }
    }
    rows.push_back(make_row("zoo", "env_branch_continuity/paper_h", 6, worst, 1e-10));
  }
  return rows;
}

// Nonconvexity estimates: exact zero on convex members, budget monotonicity,
// the per-sample residual cap, the paper_h box sup, and the paired
// envelope-vs-function comparison.
inline std::vector<PropertyRow> nc_suite(const CheckConfig& cfg) {
  std::vector<PropertyRow> rows;
  for (const ZooEntry& e : default_zoo()) {
    const FunctionSpec& f = e.spec;
    if (f.rho <= 0.0) {
      NcEstimate est = nc_estimate(f, e.sampling_box, 512, cfg.seed);
      rows.push_back(make_row("nc", "convex_zero/" + f.name, 512, est.value, 1e-12));
    } else {
      double worst = -std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < 1000; ++k) {
        NcCandidate c = nc_candidate(e.sampling_box, cfg.seed, k);
        worst = std::max(worst, weak_convexity_residual(f, c.x, c.y, c.lambda));
      }
      rows.push_back(make_row("nc", "residual_cap/" + f.name, 1000, worst, 1e-9));
    }
  }

  for (const char* name : {"paper_h", "double_well"}) {
    ZooEntry e = make_function(name);
    double v256 = nc_estimate(e.spec, e.sampling_box, 256, cfg.seed).value;
    double v512 = nc_estimate(e.spec, e.sampling_box, 512, cfg.seed).value;
    rows.push_back(
        make_row("nc", std::string("budget_monotone/") + name, 512, v256 - v512, 0.0));

    for (double gamma : {0.05, 0.1, 0.2}) {
      NcComparison cmp = nc_envelope_comparison(e.spec, gamma, e.sampling_box, 1024, cfg.seed);
      rows.push_back(make_row("nc",
                              std::string("envelope_comparison/") + name + "@" +
                                  csv::format(gamma),
                              1024, cmp.env_nc.value - cmp.f_nc.value, 1e-8));
    }
  }

  {
    ZooEntry e = make_function("paper_h");
    NcEstimate est = nc_estimate(e.spec, e.sampling_box, 2048, cfg.seed);
    rows.push_back(make_row("nc", "paper_h_sup", 2048, 0.5 - est.value, 1e-9));
  }
  return rows;
}

// Every suite, merged in a fixed order so reruns are byte-identical.
inline PropertyReport run_all_checks(const CheckConfig& cfg = {}) {
  PropertyReport report;
  report.seed = cfg.seed;
  for (auto* suite : {func_model_suite, inner_solver_suite, prox_engine_suite, envelope_suite,
                      conjugate_suite, zoo_suite, nc_suite}) {
    std::vector<PropertyRow> rows = suite(cfg);
    report.rows.insert(report.rows.end(), rows.begin(), rows.end());
  }
  return report;
}

}  // namespace moreau
