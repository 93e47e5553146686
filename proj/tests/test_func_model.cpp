#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "moreau/check_suites.hpp"
#include "moreau/function_spec.hpp"
#include "moreau/rng.hpp"
#include "moreau/zoo.hpp"

using namespace moreau;
using Catch::Approx;

TEST_CASE("evaluate returns oracle values and +inf outside the domain", "[func_model]") {
  REQUIRE(evaluate(make_function("zero").spec, Point::scalar(0.7)).value() == 0.0);

  // piecewise two-well: 1/2 - x^2 on the inner branch
  REQUIRE(evaluate(make_function("paper_h").spec, Point::scalar(0.0)).value() == 0.5);
  REQUIRE(evaluate(make_function("paper_h").spec, Point::scalar(1.0)).value() == 0.0);

  ExtendedReal outside = evaluate(make_function("indicator", {0.0, 1.0}).spec, Point::scalar(2.0));
  REQUIRE_FALSE(outside.finite());

  REQUIRE_THROWS_AS(evaluate(make_function("zero").spec, Point{0.0, 1.0}), dimension_mismatch);
}

TEST_CASE("gradient oracle values and unavailability", "[func_model]") {
  REQUIRE(gradient(make_function("paper_h").spec, Point::scalar(1.0)).scalar_value() == 0.0);
  REQUIRE(gradient(make_function("quadratic", {2.0}).spec, Point::scalar(3.0)).scalar_value() ==
          6.0);
  REQUIRE_THROWS_AS(gradient(make_function("absolute_value").spec, Point::scalar(0.0)),
                    gradient_unavailable);

  FunctionSpec no_grad;
  no_grad.value = [](const Point&) { return ExtendedReal(0.0); };
  no_grad.name = "valueless";
  REQUIRE_THROWS_AS(gradient(no_grad, Point::scalar(0.0)), gradient_unavailable);
}

TEST_CASE("weak convexity residual", "[func_model]") {
  SECTION("convex members stay nonpositive") {
    Rng rng(7);
    for (const char* name : {"zero", "absolute_value"}) {
      FunctionSpec f = make_function(name).spec;
      for (int s = 0; s < 200; ++s) {
        Point x = rng.point_in(Box::cube(1, -2.0, 2.0));
        Point y = rng.point_in(Box::cube(1, -2.0, 2.0));
        REQUIRE(weak_convexity_residual(f, x, y, rng.uniform01()) <= 1e-12);
      }
    }
  }

  SECTION("-x^2 with modulus 2 sits exactly on the cap") {
    FunctionSpec f = make_function("quadratic", {-2.0}).spec;
    REQUIRE(f.rho == 2.0);
    Rng rng(8);
    for (int s = 0; s < 200; ++s) {
      Point x = rng.point_in(Box::cube(1, -2.0, 2.0));
      Point y = rng.point_in(Box::cube(1, -2.0, 2.0));
      REQUIRE(weak_convexity_residual(f, x, y, rng.uniform01()) ==
              Approx(0.0).margin(1e-13));
    }
  }

  SECTION("two-well midpoint value at the symmetric chord") {
    FunctionSpec h = make_function("paper_h").spec;
    // h(0) - h(-1)/2 - h(1)/2 - (rho/2) * 1/4 * 4 = 0.5 - 1
    REQUIRE(weak_convexity_residual(h, Point::scalar(-1.0), Point::scalar(1.0), 0.5) ==
            Approx(-0.5).margin(1e-15));
  }

  SECTION("rejects invalid lambda and infinite values") {
    FunctionSpec f = make_function("zero").spec;
    REQUIRE_THROWS_AS(weak_convexity_residual(f, Point::scalar(0.0), Point::scalar(1.0), 1.5),
                      std::invalid_argument);
    FunctionSpec ind = make_function("indicator", {0.0, 1.0}).spec;
    REQUIRE_THROWS_AS(
        weak_convexity_residual(ind, Point::scalar(-1.0), Point::scalar(0.5), 0.5),
        infinite_value);
  }
}

TEST_CASE("shift to convex", "[func_model]") {
  SECTION("modulus zero is the identity") {
    FunctionSpec z = make_function("zero").spec;
    FunctionSpec s = shift_to_convex(z);
    REQUIRE(s.name == "zero");
    REQUIRE(s.rho == 0.0);
    REQUIRE(static_cast<bool>(s.analytic_prox));  // analytic forms survive the no-op
  }

  SECTION("quadratic shifts to a flatter quadratic") {
    FunctionSpec f = make_function("quadratic", {-1.0}).spec;  // rho = 1
    FunctionSpec s = shift_to_convex(f);
    REQUIRE(s.rho == 0.0);
    for (double x : {-1.5, -0.3, 0.0, 0.7, 2.0}) {
      REQUIRE(s.value(Point::scalar(x)).value() == Approx(0.0).margin(1e-15));
      REQUIRE(s.gradient(Point::scalar(x)).scalar_value() == Approx(0.0).margin(1e-15));
    }
  }

  SECTION("two-well shifted by its modulus has a constant inner plateau") {
    FunctionSpec s = shift_to_convex(make_function("paper_h").spec);
    for (double x : {-0.5, -0.25, 0.0, 0.3, 0.5})
      REQUIRE(s.value(Point::scalar(x)).value() == Approx(0.5).margin(1e-15));
    REQUIRE(s.hessian(Point::scalar(0.2))(0, 0) == Approx(0.0).margin(1e-15));
  }
}

TEST_CASE("declared moduli hold on random samples for every member", "[func_model]") {
  for (const PropertyRow& r : func_model_suite(CheckConfig{})) {
    INFO(r.suite << "/" << r.check << " worst=" << r.worst << " tol=" << r.tolerance);
    CHECK(r.pass);
  }
}
