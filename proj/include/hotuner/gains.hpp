#pragma once
// Closed-form hyperparameter rules, iteration-count formulas, and the
// first-order lower-bound curve.

#include "hotuner/objective.hpp"
#include "hotuner/optim.hpp"
#include "hotuner/param_vector.hpp"

namespace hot {

struct DerivedGains {
  double alpha_bar = 0.0;  // step size
  double beta_bar = 0.0;   // momentum weight
  double kappa = 0.0;      // condition number L_bar/mu
  double L_bar = 0.0;      // smoothness
  double mu = 0.0;
  double psi = 0.0;        // distance proxy, >= 1
  double epsilon = 0.0;    // target gap
  double gamma = 0.0;
  double beta = 0.0;
};

// Gain schedule hitting a target gap epsilon given Psi >= max{1, N d^2}:
// mu = eps/Psi, L = 1 + mu, alpha = 1/L, kappa = L/mu,
// beta_bar = (sqrt(kappa)-1)/(sqrt(kappa)+1); also beta = 1 - beta_bar and
// gamma = alpha/beta for the tuner form.
DerivedGains schedule_for_gap(double epsilon, double psi);

// Full pipeline from initial data: N0 = 1 + phi0_opnorm_sq,
// Psi = max{1, N0 ||theta0 - theta_star||^2}, then as schedule_for_gap but
// with L = L_smooth + mu.
DerivedGains gains_from_initial_data(double phi0_opnorm_sq,
                                     const ParamVector& theta0,
                                     const ParamVector& theta_star,
                                     double L_smooth, double epsilon);

// Iterations guaranteed to reach gap <= epsilon for the methods with
// worst-case rates on smooth convex problems (ceil'd, >= 1). Supported
// tags: GdFixed, NesterovTv, Hot.
long iterations_to_gap(Method m, double L_bar, double dist_sq, double epsilon);

// Strongly convex gradient-descent count: ceil(kappa log(initial_gap/eps)).
long iterations_to_gap_strongly_convex(double kappa, double initial_gap,
                                       double epsilon);

// Heavy-ball gains for a symmetric positive definite quadratic:
// alpha = 4/(sqrt(L)+sqrt(mu))^2, beta_bar = ((sqrt(k)-1)/(sqrt(k)+1))^2.
DerivedGains hb_gains_for_quadratic(double L_bar, double mu);

// Lower bound on the gap of any first-order span method at iteration k:
// 3 L d^2 / (32 (k+1)^2), valid for 1 <= k <= (n-1)/2 with d^2 the distance
// for the (2k+1)-dimensional hard instance.
double first_order_lower_bound(double L_bar, double dist_sq, long k);

}  // namespace hot
