#pragma once

#include <stdexcept>
#include <string>

namespace moreau {

struct dimension_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// gamma * rho >= 1 (or gamma <= 0): prox subproblem not strongly convex.
struct inadmissible_gamma : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct gradient_unavailable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct hessian_unavailable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct infinite_value : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct invalid_bracket : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct solve_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct unbounded_conjugate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 1 + gamma * lambda <= 0 for a curvature eigenvalue lambda.
struct singular_resolvent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace moreau
