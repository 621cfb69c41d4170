#pragma once
// Online Lyapunov function evaluation and per-step verification of the
// discrete stability inequalities. Checkers are diagnostic only and never
// feed back into the optimizers.

#include "hotuner/objective.hpp"
#include "hotuner/optim.hpp"

namespace hot {

struct LyapunovRecord {
  long k = 0;
  double V = 0.0;
  double delta_V = 0.0;
  double rhs_bound = 0.0;  // certified upper bound on delta_V
  double envelope = 0.0;   // closed-form upper bound on V at this k
  bool satisfied = false;  // delta_V <= rhs_bound + tol
  double slack = 0.0;      // rhs_bound - delta_V
};

// V = (1/gamma) ||vartheta - theta*||^2 + (1/gamma) ||theta - vartheta||^2.
double lyapunov_value(const TunerState& s, const ParamVector& theta_star,
                      double gamma);

struct EnvelopeCoeffs {
  double decay = 0.0;   // multiplies V in the increment bound
  double offset = 0.0;  // constant disturbance term
};

// Two-call tuner: decay = gamma*beta*10/16,
// offset = (3570 beta + 896)/(224 beta) * dist_sq.
EnvelopeCoeffs hot_envelope_coeffs(const Gains& g, double dist_sq);
// Single-call tuner: decay = gamma/8, offset = 189/64 * dist_sq.
EnvelopeCoeffs hb_envelope_coeffs(const Gains& g, double dist_sq);

// Certified bound on V_{k+1} - V_k for one step of the two-call tuner:
// -L_k(theta_{k+1})/N_k - mu*decay*V_k + mu*offset. With mu = 0 this is the
// plain -L/N decrement bound.
double hot_increment_bound(const ObjectiveSample& sample,
                           const TunerState& pre, const TunerState& post,
                           const Gains& g, const ParamVector& theta_star);
double hb_increment_bound(const ObjectiveSample& sample, const TunerState& pre,
                          const TunerState& post, const Gains& g,
                          const ParamVector& theta_star);

// Closed-form envelope V_k <= exp(-mu*decay*k) (V0 - offset/decay)
// + offset/decay, evaluated in a cancellation-free form (mu = 0 gives V0).
double hot_envelope(double v0, const Gains& g, double dist_sq, long k);
double hb_envelope(double v0, const Gains& g, double dist_sq, long k);

// Normalized gradient descent check with V = ||theta_tilde||^2 / gamma and
// bound -(2 - gamma) e_y^2 / N_k; e_y is the pre-step output error.
LyapunovRecord ngd_check(const ParamVector& theta_tilde_before,
                         const ParamVector& theta_tilde_after, double e_y,
                         double N_k, double gamma);

// Full per-step record for the two tuner variants; v0 is the Lyapunov value
// at k = 0 (used for the envelope). Tolerance is relative to max(1, |V_k|).
LyapunovRecord check_tuner_step(const ObjectiveSample& sample,
                                const TunerState& pre, const TunerState& post,
                                const Gains& g, const ParamVector& theta_star,
                                double v0, double rel_tol = 1e-9);

}  // namespace hot
