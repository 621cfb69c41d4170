#include "hotuner/lyapunov.hpp"

#include <cmath>
#include <stdexcept>

namespace hot {

double lyapunov_value(const TunerState& s, const ParamVector& theta_star,
                      double gamma) {
  if (!s.vartheta) throw std::invalid_argument("state has no vartheta");
  if (!(gamma > 0.0)) throw std::domain_error("gamma must be positive");
  return (s.vartheta->distance_sq(theta_star) +
          s.theta.distance_sq(*s.vartheta)) /
         gamma;
}

EnvelopeCoeffs hot_envelope_coeffs(const Gains& g, double dist_sq) {
  return {g.gamma * g.beta * (10.0 / 16.0),
          (3570.0 * g.beta + 896.0) / (224.0 * g.beta) * dist_sq};
}

EnvelopeCoeffs hb_envelope_coeffs(const Gains& g, double dist_sq) {
  return {g.gamma / 8.0, (189.0 / 64.0) * dist_sq};
}

namespace {

double increment_bound(const ObjectiveSample& sample, const TunerState& pre,
                       const TunerState& post, const Gains& g,
                       const ParamVector& theta_star,
                       const EnvelopeCoeffs& c) {
  const double decrement = -sample.loss(post.theta) / sample.normalization;
  if (g.mu == 0.0) return decrement;
  const double v = lyapunov_value(pre, theta_star, g.gamma);
  return decrement - g.mu * c.decay * v + g.mu * c.offset;
}

double envelope(double v0, double mu, const EnvelopeCoeffs& c, long k) {
  // exp(-mu*decay*k) (V0 - offset/decay) + offset/decay, rewritten so the
  // mu = 0 case returns exactly V0 instead of a difference of huge terms.
  const double x = -mu * c.decay * static_cast<double>(k);
  return v0 * std::exp(x) + (c.offset / c.decay) * (-std::expm1(x));
}

}  // namespace

double hot_increment_bound(const ObjectiveSample& sample,
                           const TunerState& pre, const TunerState& post,
                           const Gains& g, const ParamVector& theta_star) {
  const double d2 = theta_star.distance_sq(pre.theta0);
  return increment_bound(sample, pre, post, g, theta_star,
                         hot_envelope_coeffs(g, d2));
}

double hb_increment_bound(const ObjectiveSample& sample, const TunerState& pre,
                          const TunerState& post, const Gains& g,
                          const ParamVector& theta_star) {
  const double d2 = theta_star.distance_sq(pre.theta0);
  return increment_bound(sample, pre, post, g, theta_star,
                         hb_envelope_coeffs(g, d2));
}

double hot_envelope(double v0, const Gains& g, double dist_sq, long k) {
  return envelope(v0, g.mu, hot_envelope_coeffs(g, dist_sq), k);
}

double hb_envelope(double v0, const Gains& g, double dist_sq, long k) {
  return envelope(v0, g.mu, hb_envelope_coeffs(g, dist_sq), k);
}

LyapunovRecord ngd_check(const ParamVector& theta_tilde_before,
                         const ParamVector& theta_tilde_after, double e_y,
                         double N_k, double gamma) {
  if (!(gamma > 0.0 && gamma < 2.0))
    throw std::domain_error("ngd check needs gamma in (0,2)");
  LyapunovRecord r;
  r.V = theta_tilde_before.norm_sq() / gamma;
  r.delta_V = theta_tilde_after.norm_sq() / gamma - r.V;
  r.rhs_bound = -(2.0 - gamma) * e_y * e_y / N_k;
  r.envelope = r.V;
  r.slack = r.rhs_bound - r.delta_V;
  r.satisfied = r.delta_V <= r.rhs_bound + 1e-9 * std::max(1.0, std::abs(r.V));
  return r;
}

LyapunovRecord check_tuner_step(const ObjectiveSample& sample,
                                const TunerState& pre, const TunerState& post,
                                const Gains& g, const ParamVector& theta_star,
                                double v0, double rel_tol) {
  const bool hb = pre.method == Method::HotHb;
  if (!hb && pre.method != Method::Hot)
    throw std::invalid_argument("tuner check expects hot or hot_hb state");
  const double d2 = theta_star.distance_sq(pre.theta0);

  LyapunovRecord r;
  r.k = pre.k;
  r.V = lyapunov_value(pre, theta_star, g.gamma);
  r.delta_V = lyapunov_value(post, theta_star, g.gamma) - r.V;
  r.rhs_bound = hb ? hb_increment_bound(sample, pre, post, g, theta_star)
                   : hot_increment_bound(sample, pre, post, g, theta_star);
  r.envelope = hb ? hb_envelope(v0, g, d2, pre.k)
                  : hot_envelope(v0, g, d2, pre.k);
  r.slack = r.rhs_bound - r.delta_V;
  const double tol = rel_tol * std::max(1.0, std::abs(r.V));
  r.satisfied = r.delta_V <= r.rhs_bound + tol && r.V <= r.envelope + tol;
  return r;
}

}  // namespace hot
