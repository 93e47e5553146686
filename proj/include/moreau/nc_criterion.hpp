#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "envelope.hpp"
#include "errors.hpp"
#include "function_spec.hpp"
#include "point.hpp"
#include "rng.hpp"

namespace moreau {

// Box-restricted lower estimate of the nonconvexity measure
//   NC(f) = sup f(lx + (1-l)y) - l f(x) - (1-l) f(y)
// over x, y in the box and l in [0,1]. The true sup ranges over all of R^d;
// everything here is explicitly a lower bound on the box-restricted sup.
struct NcEstimate {
  double value = 0.0;
  Point witness_x;
  Point witness_y;
  double witness_lambda = 0.0;
  Box box;
  std::size_t budget = 0;
};

struct NcCandidate {
  Point x;
  Point y;
  double lambda;
};

// Chord violation at one triple. Throws if f is +inf at any of the three
// evaluation points: the scan box has to sit inside dom f.
inline double nc_violation(const FunctionSpec& f, const Point& x, const Point& y,
                           double lambda) {
  Point m = lambda * x + (1.0 - lambda) * y;
  ExtendedReal fx = evaluate(f, x), fy = evaluate(f, y), fm = evaluate(f, m);
  if (!fx.finite() || !fy.finite() || !fm.finite())
    throw infinite_value("nonconvexity scan box must lie inside the domain");
  return fm.value() - lambda * fx.value() - (1.0 - lambda) * fy.value();
}

// k-th candidate triple from the low-discrepancy pool. Deterministic in
// (box, seed, k) and independent of the budget, so a larger budget consumes
// a strict superset of a smaller one.
inline NcCandidate nc_candidate(const Box& box, std::uint64_t seed, std::size_t k) {
  std::size_t d = box.lo.dim();
  WeylSequence seq(2 * d + 1, seed);
  std::vector<double> u = seq.at(k);
  Point x(d), y(d);
  for (std::size_t i = 0; i < d; ++i) {
    x[i] = box.lo[i] + u[i] * (box.hi[i] - box.lo[i]);
    y[i] = box.lo[i] + u[d + i] * (box.hi[i] - box.lo[i]);
  }
  return {x, y, u[2 * d]};
}

namespace detail {

// Coordinate ascent around the incumbent with shrinking trial windows.
// Accepts strict improvements only, so the result never drops below the
// starting value, and every trial stays inside box x box x [0,1].
inline void nc_refine(const FunctionSpec& f, const Box& box, NcCandidate& c, double& best) {
  std::size_t d = box.lo.dim();
  std::vector<double> wx(d);
  for (std::size_t i = 0; i < d; ++i) wx[i] = 0.25 * (box.hi[i] - box.lo[i]);
  double wl = 0.25;
  auto clamp = [](double v, double lo, double hi) { return std::min(std::max(v, lo), hi); };
  for (int round = 0; round < 60; ++round) {
    for (std::size_t i = 0; i < d; ++i) {
      for (double s : {-1.0, 1.0}) {
        NcCandidate t = c;
        t.x[i] = clamp(c.x[i] + s * wx[i], box.lo[i], box.hi[i]);
        double v = nc_violation(f, t.x, t.y, t.lambda);
        if (v > best) {
          best = v;
          c = t;
        }
      }
      for (double s : {-1.0, 1.0}) {
        NcCandidate t = c;
        t.y[i] = clamp(c.y[i] + s * wx[i], box.lo[i], box.hi[i]);
        double v = nc_violation(f, t.x, t.y, t.lambda);
        if (v > best) {
          best = v;
          c = t;
        }
      }
      wx[i] *= 0.62;
    }
    for (double s : {-1.0, 1.0}) {
      NcCandidate t = c;
      t.lambda = clamp(c.lambda + s * wl, 0.0, 1.0);
      double v = nc_violation(f, t.x, t.y, t.lambda);
      if (v > best) {
        best = v;
        c = t;
      }
    }
    wl *= 0.62;
  }
}

}  // namespace detail

// Seeded pool scan plus a refinement pass around each new incumbent. The
// incumbent state after the first k pool points does not depend on the total
// budget, so growing the budget never decreases the returned value.
inline NcEstimate nc_estimate(const FunctionSpec& f, const Box& box, std::size_t budget,
                              std::uint64_t seed) {
  if (box.lo.dim() != f.dim) throw dimension_mismatch("scan box dimension mismatch");
  NcEstimate est;
  est.box = box;
  est.budget = budget;
  NcCandidate incumbent = nc_candidate(box, seed, 0);
  double best = nc_violation(f, incumbent.x, incumbent.y, incumbent.lambda);
  detail::nc_refine(f, box, incumbent, best);
  for (std::size_t k = 1; k < budget; ++k) {
    NcCandidate c = nc_candidate(box, seed, k);
    double v = nc_violation(f, c.x, c.y, c.lambda);
    if (v > best) {
      best = v;
      incumbent = c;
      detail::nc_refine(f, box, incumbent, best);
    }
  }
  est.value = best;
  est.witness_x = incumbent.x;
  est.witness_y = incumbent.y;
  est.witness_lambda = incumbent.lambda;
  return est;
}

struct NcComparison {
  NcEstimate env_nc;
  NcEstimate f_nc;
  bool ok = false;
};

// Paired one-sided test that the envelope does not increase the estimate.
// Both functions see the identical candidate pool; refinement runs per
// function, which only raises each side's own estimate.
inline NcComparison nc_envelope_comparison(const FunctionSpec& f, double gamma, const Box& box,
                                           std::size_t budget, std::uint64_t seed,
                                           double tolerance = 1e-8) {
  check_admissible(f.rho, gamma);
  FunctionSpec env = envelope_as_function(f, gamma);
  NcComparison cmp;
  cmp.env_nc = nc_estimate(env, box, budget, seed);
  cmp.f_nc = nc_estimate(f, box, budget, seed);
  cmp.ok = cmp.env_nc.value <= cmp.f_nc.value + tolerance;
  return cmp;
}

}  // namespace moreau
