#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "moreau/check_suites.hpp"
#include "moreau/envelope.hpp"
#include "moreau/zoo.hpp"
#include "oracles.hpp"

using namespace moreau;
using Catch::Approx;

TEST_CASE("envelope values", "[envelope]") {
  FunctionSpec h = make_function("paper_h").spec;
  REQUIRE(env_value(h, 0.25, Point::scalar(0.0)) == Approx(0.5).margin(1e-15));
  REQUIRE(env_value(h, 0.25, Point::scalar(1.0)) == Approx(0.0).margin(1e-15));
  REQUIRE(env_value(make_function("zero").spec, 0.7, Point::scalar(2.2)) == 0.0);

  FunctionSpec a = make_function("absolute_value").spec;
  REQUIRE(env_value(a, 1.0, Point::scalar(3.0)) == Approx(2.5).margin(1e-15));
  double ref = oracle::env_1d([](double y) { return std::abs(y); }, 1.0, 3.0, -8.0, 8.0);
  REQUIRE(env_value(a, 1.0, Point::scalar(3.0)) == Approx(ref).margin(1e-6));

  SECTION("numeric path agrees with the closed form") {
    EnvelopeOptions numeric;
    numeric.prox.use_analytic = false;
    REQUIRE(env_value(h, 0.25, Point::scalar(0.3), numeric) ==
            Approx(env_value(h, 0.25, Point::scalar(0.3))).margin(1e-9));
  }
}

TEST_CASE("envelope gradient matches the prox displacement", "[envelope]") {
  FunctionSpec h = make_function("paper_h").spec;
  REQUIRE(env_gradient(h, 0.25, Point::scalar(0.1)).scalar_value() ==
          Approx(-0.4).margin(1e-15));
  REQUIRE(env_gradient(h, 0.25, Point::scalar(1.0)).scalar_value() == 0.0);
  REQUIRE(env_gradient(make_function("zero").spec, 0.5, Point::scalar(-4.0)).scalar_value() ==
          0.0);

  SECTION("equals the function gradient at the prox point") {
    FunctionSpec w = make_function("double_well").spec;
    double gamma = 0.2;
    Point x = Point::scalar(0.8);
    Point p = prox(w, gamma, x).point;
    REQUIRE(env_gradient(w, gamma, x).scalar_value() ==
            Approx(gradient(w, p).scalar_value()).margin(1e-8));
  }
}

TEST_CASE("envelope gamma-derivative", "[envelope]") {
  FunctionSpec h = make_function("paper_h").spec;
  REQUIRE(env_dgamma(h, 0.25, Point::scalar(0.1)) == Approx(-0.08).margin(1e-15));
  REQUIRE(env_dgamma(h, 0.25, Point::scalar(1.0)) == 0.0);  // prox fixed point
  REQUIRE(env_dgamma(make_function("quadratic", {1.0}).spec, 1.0, Point::scalar(2.0)) ==
          Approx(-0.5).margin(1e-15));

  SECTION("matches a finite difference of the envelope in gamma") {
    double fd = oracle::central_diff(
        [&](double g) { return env_value(h, g, Point::scalar(0.3)); }, 0.25, 1e-6);
    REQUIRE(env_dgamma(h, 0.25, Point::scalar(0.3)) == Approx(fd).margin(1e-6));
  }
}

TEST_CASE("Hamilton-Jacobi residual vanishes", "[envelope]") {
  REQUIRE(hj_residual(make_function("paper_h").spec, 0.25, Point::scalar(0.1)) <= 1e-15);
  REQUIRE(hj_residual(make_function("zero").spec, 1.0, Point::scalar(0.9)) == 0.0);
  REQUIRE(hj_residual(make_function("double_well").spec, 0.1, Point::scalar(0.7)) <= 1e-8);
}

TEST_CASE("envelope hessian through the resolvent", "[envelope]") {
  SECTION("quadratic curvature is damped to alpha / (1 + gamma alpha)") {
    FunctionSpec f = make_function("quadratic", {2.0}).spec;
    SymMatrix m = env_hessian(f, 0.25, Point::scalar(1.4));
    REQUIRE(m(0, 0) == Approx(2.0 / 1.5).margin(1e-14));
  }

  SECTION("negative curvature amplifies near the admissibility edge") {
    REQUIRE(env_hessian(make_function("paper_h").spec, 0.25, Point::scalar(0.0))(0, 0) ==
            Approx(-4.0).margin(1e-14));
  }

  SECTION("flat stays flat") {
    REQUIRE(env_hessian(make_function("zero").spec, 0.5, Point::scalar(1.0))(0, 0) == 0.0);
  }

  SECTION("diagonal curvature is damped per axis") {
    FunctionSpec f = make_function("diag_quadratic", {0.5, 2.0, 5.0}).spec;
    SymMatrix m = env_hessian(f, 0.1, Point{0.3, -0.2, 1.1});
    std::vector<double> d = m.diag();
    REQUIRE(d[0] == Approx(0.5 / 1.05).margin(1e-13));
    REQUIRE(d[1] == Approx(2.0 / 1.2).margin(1e-13));
    REQUIRE(d[2] == Approx(5.0 / 1.5).margin(1e-13));
  }

  SECTION("no curvature oracle") {
    REQUIRE_THROWS_AS(env_hessian(make_function("absolute_value").spec, 0.5, Point::scalar(2.0)),
                      hessian_unavailable);
  }

  SECTION("curvature below what the declared modulus admits") {
    // A miscalibrated spec: declared rho = 2 but actual curvature -5, so the
    // resolvent 1 + gamma lambda crosses zero at an admissible gamma.
    FunctionSpec bad;
    bad.dim = 1;
    bad.rho = 2.0;
    bad.name = "miscalibrated";
    bad.value = [](const Point& p) {
      return ExtendedReal(-2.5 * p.scalar_value() * p.scalar_value());
    };
    bad.hessian = [](const Point&) { return SymMatrix::scalar1d(-5.0); };
    bad.analytic_prox = [](double, const Point& p) { return p; };
    REQUIRE_THROWS_AS(env_hessian(bad, 0.25, Point::scalar(0.3)), singular_resolvent);
  }
}

TEST_CASE("envelope regularity moduli", "[envelope]") {
  SECTION("weakly convex member at the smoothness branch point") {
    EnvModuli m = env_moduli(2.0, 0.25, 2.0);
    REQUIRE(m.weak == Approx(4.0).margin(1e-14));
    REQUIRE(m.strong == 0.0);
    REQUIRE(m.smooth == Approx(4.0).margin(1e-14));          // 1/gamma branch
    REQUIRE(m.smooth == Approx(m.weak).margin(1e-14));       // equals rho/(1-gamma rho) here
    REQUIRE(m.smooth_prox_image.has_value());
    REQUIRE(*m.smooth_prox_image == Approx(4.0).margin(1e-14));
  }

  SECTION("convex member") {
    EnvModuli m = env_moduli(0.0, 0.7);
    REQUIRE(m.weak == 0.0);
    REQUIRE(m.strong == 0.0);
    REQUIRE(m.smooth == Approx(1.0 / 0.7).margin(1e-14));
    REQUIRE_FALSE(m.smooth_prox_image.has_value());
  }

  SECTION("strongly convex member keeps strong convexity") {
    EnvModuli m = env_moduli(-1.0, 1.0);
    REQUIRE(m.weak == Approx(-0.5).margin(1e-14));
    REQUIRE(m.strong == Approx(0.5).margin(1e-14));
    REQUIRE(m.smooth == 1.0);
  }

  SECTION("prox-image bound only below the step threshold") {
    REQUIRE_FALSE(env_moduli(0.0, 0.3, 2.0).smooth_prox_image.has_value());  // gamma L = 0.6
  }
}

TEST_CASE("one report bundles consistent pointwise quantities", "[envelope]") {
  FunctionSpec h = make_function("paper_h").spec;
  EnvelopeReport rep = envelope_report(h, 0.25, Point::scalar(0.1));
  REQUIRE(rep.value == Approx(env_value(h, 0.25, Point::scalar(0.1))).margin(1e-15));
  REQUIRE(rep.gradient.scalar_value() == Approx(-0.4).margin(1e-15));
  REQUIRE(rep.dgamma == Approx(-0.08).margin(1e-15));
  REQUIRE(rep.hessian.has_value());
  REQUIRE((*rep.hessian)(0, 0) == Approx(-4.0).margin(1e-12));

  EnvelopeReport flat = envelope_report(make_function("absolute_value").spec, 1.0,
                                        Point::scalar(3.0));
  REQUIRE_FALSE(flat.hessian.has_value());

  // x = -0.4 at gamma = 0.1 sends the prox exactly onto the curvature jump
  // at -1/2; the report drops the hessian and keeps everything else
  EnvelopeReport jump = envelope_report(h, 0.1, Point::scalar(-0.4));
  REQUIRE_FALSE(jump.hessian.has_value());
  REQUIRE(jump.gradient.scalar_value() == Approx(1.0).margin(1e-12));
}

TEST_CASE("proximal point iteration", "[envelope]") {
  FunctionSpec h = make_function("paper_h").spec;

  SECTION("descends into the nearest well") {
    MinimizeResult r = proximal_point_minimize(h, 0.25, Point::scalar(0.6), 1e-8, 1000, {}, true);
    REQUIRE(r.converged);
    REQUIRE(r.iterations <= 200);
    REQUIRE(r.point.scalar_value() == Approx(1.0).margin(1e-6));
    REQUIRE(r.trace.size() >= 2);
    REQUIRE(r.trace.front().scalar_value() == 0.6);
  }

  SECTION("the degenerate critical point is a fixed point") {
    MinimizeResult r = proximal_point_minimize(h, 0.25, Point::scalar(0.0));
    REQUIRE(r.converged);
    REQUIRE(r.iterations == 1);
    REQUIRE(r.point.scalar_value() == 0.0);
  }

  SECTION("flat objective converges immediately") {
    MinimizeResult r = proximal_point_minimize(make_function("zero").spec, 0.5,
                                               Point::scalar(-3.3));
    REQUIRE(r.converged);
    REQUIRE(r.iterations == 1);
    REQUIRE(r.point.scalar_value() == -3.3);
  }

  SECTION("iteration budget is honored") {
    MinimizeResult r = proximal_point_minimize(h, 0.25, Point::scalar(0.6), 1e-8, 3);
    REQUIRE_FALSE(r.converged);
    REQUIRE(r.iterations == 3);
  }
}

TEST_CASE("gamma profile", "[envelope]") {
  FunctionSpec h = make_function("paper_h").spec;

  SECTION("envelope and prox values decrease as smoothing grows") {
    GammaProfile prof = compute_gamma_profile(h, Point::scalar(0.3), {0.01, 0.25, 0.49});
    REQUIRE(prof.rows.size() == 3);
    double fx = evaluate(h, Point::scalar(0.3)).value();
    for (std::size_t i = 0; i < prof.rows.size(); ++i) {
      REQUIRE(prof.rows[i].env_value <= fx + 1e-12);
      if (i > 0) REQUIRE(prof.rows[i].env_value <= prof.rows[i - 1].env_value + 1e-12);
      if (i > 0) REQUIRE(prof.rows[i].f_at_prox <= prof.rows[i - 1].f_at_prox + 1e-12);
    }
  }

  SECTION("flat profile is constant") {
    GammaProfile prof = compute_gamma_profile(make_function("zero").spec, Point::scalar(1.5),
                                              {0.1, 1.0, 10.0});
    for (const GammaProfileRow& row : prof.rows) {
      REQUIRE(row.env_value == 0.0);
      REQUIRE(row.prox_point.scalar_value() == 1.5);
      REQUIRE(row.f_at_prox == 0.0);
    }
  }

  SECTION("grid validation") {
    REQUIRE_THROWS_AS(compute_gamma_profile(h, Point::scalar(0.0), {}), std::invalid_argument);
    REQUIRE_THROWS_AS(compute_gamma_profile(h, Point::scalar(0.0), {0.25, 0.01}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(compute_gamma_profile(h, Point::scalar(0.0), {0.01, 0.6}),
                      inadmissible_gamma);
  }
}

TEST_CASE("envelope packaged as a function", "[envelope]") {
  FunctionSpec h = make_function("paper_h").spec;
  FunctionSpec env = envelope_as_function(h, 0.25);
  REQUIRE(env.name == "paper_h_env");
  REQUIRE(env.rho == Approx(4.0).margin(1e-14));
  REQUIRE(env.grad_lipschitz.has_value());
  REQUIRE(evaluate(env, Point::scalar(0.0)).value() == Approx(0.5).margin(1e-12));
  REQUIRE(gradient(env, Point::scalar(0.1)).scalar_value() == Approx(-0.4).margin(1e-12));
}

TEST_CASE("envelope inequalities hold on random pairs", "[envelope]") {
  for (const PropertyRow& r : envelope_suite(CheckConfig{})) {
    INFO(r.suite << "/" << r.check << " worst=" << r.worst << " tol=" << r.tolerance);
    CHECK(r.pass);
  }
}
