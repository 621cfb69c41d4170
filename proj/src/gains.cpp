#include "hotuner/gains.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hot {

DerivedGains schedule_for_gap(double epsilon, double psi) {
  if (!(epsilon > 0.0)) throw std::domain_error("epsilon must be positive");
  if (!(psi >= 1.0)) throw std::domain_error("psi must be >= 1");
  DerivedGains d;
  d.epsilon = epsilon;
  d.psi = psi;
  d.mu = epsilon / psi;
  d.L_bar = 1.0 + d.mu;
  d.alpha_bar = 1.0 / d.L_bar;
  d.kappa = d.L_bar / d.mu;
  const double rk = std::sqrt(d.kappa);
  d.beta_bar = (rk - 1.0) / (rk + 1.0);
  d.beta = 1.0 - d.beta_bar;
  d.gamma = d.alpha_bar / d.beta;
  return d;
}

DerivedGains gains_from_initial_data(double phi0_opnorm_sq,
                                     const ParamVector& theta0,
                                     const ParamVector& theta_star,
                                     double L_smooth, double epsilon) {
  if (!(phi0_opnorm_sq >= 0.0)) throw std::domain_error("negative |phi0|^2");
  if (!(L_smooth > 0.0)) throw std::domain_error("L_smooth must be positive");
  if (!(epsilon > 0.0)) throw std::domain_error("epsilon must be positive");
  const double n0 = 1.0 + phi0_opnorm_sq;
  const double psi = std::max(1.0, n0 * theta0.distance_sq(theta_star));

  DerivedGains d;
  d.epsilon = epsilon;
  d.psi = psi;
  d.mu = epsilon / psi;
  d.L_bar = L_smooth + d.mu;
  d.alpha_bar = 1.0 / d.L_bar;
  d.kappa = d.L_bar / d.mu;
  const double rk = std::sqrt(d.kappa);
  d.beta_bar = (rk - 1.0) / (rk + 1.0);
  d.beta = 1.0 - d.beta_bar;
  d.gamma = d.alpha_bar / d.beta;
  return d;
}

namespace {
long ceil_count(double x) {
  const double c = std::ceil(x);
  return c < 1.0 ? 1L : static_cast<long>(c);
}
}  // namespace

long iterations_to_gap(Method m, double L_bar, double dist_sq,
                       double epsilon) {
  if (!(L_bar > 0.0 && dist_sq >= 0.0 && epsilon > 0.0))
    throw std::domain_error("iterations_to_gap: arguments must be positive");
  switch (m) {
    case Method::GdFixed:
      return ceil_count(2.0 * L_bar * dist_sq / epsilon - 4.0);
    case Method::NesterovTv:
      return ceil_count(std::sqrt(2.0 * L_bar * dist_sq / epsilon) + 1.0);
    case Method::Hot: {
      const double r = (1.0 + L_bar) * dist_sq / epsilon;
      return ceil_count(std::sqrt(1.0 + r) * std::log(2.0 + r));
    }
    default:
      throw std::invalid_argument("iterations_to_gap: unsupported method");
  }
}

long iterations_to_gap_strongly_convex(double kappa, double initial_gap,
                                       double epsilon) {
  if (!(kappa >= 1.0 && initial_gap > 0.0 && epsilon > 0.0))
    throw std::domain_error("bad arguments");
  return ceil_count(kappa * std::log(initial_gap / epsilon));
}

DerivedGains hb_gains_for_quadratic(double L_bar, double mu) {
  if (!(mu > 0.0)) throw std::domain_error("mu must be positive");
  if (!(L_bar >= mu)) throw std::domain_error("need L_bar >= mu");
  DerivedGains d;
  d.L_bar = L_bar;
  d.mu = mu;
  d.kappa = L_bar / mu;
  const double s = std::sqrt(L_bar) + std::sqrt(mu);
  d.alpha_bar = 4.0 / (s * s);
  const double m = std::max(std::abs(1.0 - std::sqrt(d.alpha_bar * L_bar)),
                            std::abs(1.0 - std::sqrt(d.alpha_bar * mu)));
  d.beta_bar = m * m;
  return d;
}

double first_order_lower_bound(double L_bar, double dist_sq, long k) {
  if (k < 1) throw std::domain_error("lower bound defined for k >= 1");
  const double kp1 = static_cast<double>(k) + 1.0;
  return 3.0 * L_bar * dist_sq / (32.0 * kp1 * kp1);
}

}  // namespace hot
