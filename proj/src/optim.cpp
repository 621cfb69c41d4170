#include "hotuner/optim.hpp"

#include <cmath>
#include <stdexcept>

namespace hot {

std::string_view method_tag(Method m) {
  switch (m) {
    case Method::GdFixed: return "gd";
    case Method::GdNormalized: return "ngd";
    case Method::NesterovTv: return "nesterov_tv";
    case Method::NesterovConst: return "nesterov_const";
    case Method::HeavyBall: return "heavy_ball";
    case Method::Hot: return "hot";
    case Method::HotHb: return "hot_hb";
  }
  return "?";
}

std::string_view method_display_name(Method m) {
  switch (m) {
    case Method::GdFixed: return "Gradient Descent";
    case Method::GdNormalized: return "Normalized Gradient Descent";
    case Method::NesterovTv: return "Nesterov Acceleration (time-varying momentum)";
    case Method::NesterovConst: return "Nesterov Acceleration (constant momentum)";
    case Method::HeavyBall: return "Heavy Ball";
    case Method::Hot: return "Higher Order Tuner";
    case Method::HotHb: return "Higher Order Tuner (HB)";
  }
  return "?";
}

std::optional<Method> method_from_tag(std::string_view tag) {
  for (Method m : {Method::GdFixed, Method::GdNormalized, Method::NesterovTv,
                   Method::NesterovConst, Method::HeavyBall, Method::Hot,
                   Method::HotHb}) {
    if (method_tag(m) == tag) return m;
  }
  return std::nullopt;
}

TunerState TunerState::gd(ParamVector theta0) {
  TunerState s;
  s.method = Method::GdFixed;
  s.theta = theta0;
  s.theta0 = std::move(theta0);
  return s;
}

TunerState TunerState::ngd(ParamVector theta0) {
  TunerState s = gd(std::move(theta0));
  s.method = Method::GdNormalized;
  return s;
}

TunerState TunerState::nesterov_const(ParamVector theta0) {
  TunerState s = gd(std::move(theta0));
  s.method = Method::NesterovConst;
  s.nu = s.theta;
  return s;
}

TunerState TunerState::nesterov_tv(ParamVector theta0) {
  TunerState s = nesterov_const(std::move(theta0));
  s.method = Method::NesterovTv;
  // iota_{-1} = 0 gives iota_0 = (1 + sqrt(1))/2 = 1.
  s.iota = 1.0;
  return s;
}

TunerState TunerState::heavy_ball(ParamVector theta0) {
  TunerState s = gd(std::move(theta0));
  s.method = Method::HeavyBall;
  s.theta_prev = s.theta;
  return s;
}

TunerState TunerState::hot(ParamVector theta0,
                           std::optional<ParamVector> vartheta0) {
  TunerState s = gd(std::move(theta0));
  s.method = Method::Hot;
  s.vartheta = vartheta0 ? std::move(*vartheta0) : s.theta;
  s.vartheta->check_dim(s.theta);
  return s;
}

TunerState TunerState::hot_hb(ParamVector theta0,
                              std::optional<ParamVector> vartheta0) {
  TunerState s = hot(std::move(theta0), std::move(vartheta0));
  s.method = Method::HotHb;
  return s;
}

TunerState TunerState::initial(Method m, ParamVector theta0) {
  switch (m) {
    case Method::GdFixed: return gd(std::move(theta0));
    case Method::GdNormalized: return ngd(std::move(theta0));
    case Method::NesterovTv: return nesterov_tv(std::move(theta0));
    case Method::NesterovConst: return nesterov_const(std::move(theta0));
    case Method::HeavyBall: return heavy_ball(std::move(theta0));
    case Method::Hot: return hot(std::move(theta0));
    case Method::HotHb: return hot_hb(std::move(theta0));
  }
  throw std::invalid_argument("unknown method");
}

namespace {

void require_method(const TunerState& s, Method m) {
  if (s.method != m) throw std::invalid_argument("state/method tag mismatch");
}

ParamVector checked_gradient(const ObjectiveSample& sample,
                             const ParamVector& theta, long k) {
  ParamVector g = sample.gradient(theta);
  g.check_dim(theta);
  if (!g.is_finite()) throw NonFiniteGradient(k);
  return g;
}

void guard(const ParamVector& v, long k) {
  if (!v.is_finite()) throw DivergedError(k);
}

}  // namespace

ParamVector objective_gradient(const ObjectiveSample& sample,
                               const ParamVector& theta,
                               const ParamVector& theta0,
                               const ObjectiveSpec& obj) {
  switch (obj.kind) {
    case ObjectiveKind::Raw:
      return sample.gradient(theta);
    case ObjectiveKind::Normalized: {
      ParamVector g = sample.gradient(theta);
      g *= 1.0 / sample.normalization;
      return g;
    }
    case ObjectiveKind::Regularized:
      return regularized_gradient(sample, theta, theta0, obj.mu);
  }
  throw std::invalid_argument("unknown objective kind");
}

double objective_value(const ObjectiveSample& sample, const ParamVector& theta,
                       const ParamVector& theta0, const ObjectiveSpec& obj) {
  switch (obj.kind) {
    case ObjectiveKind::Raw:
      return sample.loss(theta);
    case ObjectiveKind::Normalized:
      return sample.loss(theta) / sample.normalization;
    case ObjectiveKind::Regularized:
      return sample.loss(theta) / sample.normalization +
             0.5 * obj.mu * theta.distance_sq(theta0);
  }
  throw std::invalid_argument("unknown objective kind");
}

TunerState hot_step(const TunerState& s, const ObjectiveSample& sample,
                    const Gains& g) {
  require_method(s, Method::Hot);
  const ObjectiveSpec f{ObjectiveKind::Regularized, g.mu};

  ParamVector grad = objective_gradient(sample, s.theta, s.theta0, f);
  if (!grad.is_finite()) throw NonFiniteGradient(s.k);

  ParamVector theta_bar = s.theta;
  theta_bar.axpy(-g.gamma * g.beta, grad);
  // theta_{k+1} = theta_bar - beta*(theta_bar - vartheta)
  ParamVector theta_next =
      ParamVector::combine(1.0 - g.beta, theta_bar, g.beta, *s.vartheta);
  guard(theta_next, s.k);

  ParamVector grad_next = objective_gradient(sample, theta_next, s.theta0, f);
  if (!grad_next.is_finite()) throw NonFiniteGradient(s.k);
  ParamVector vartheta_next = *s.vartheta;
  vartheta_next.axpy(-g.gamma, grad_next);
  guard(vartheta_next, s.k);

  TunerState out = s;
  out.k = s.k + 1;
  out.theta = std::move(theta_next);
  out.vartheta = std::move(vartheta_next);
  return out;
}

TunerState hot_hb_step(const TunerState& s, const ObjectiveSample& sample,
                       const Gains& g) {
  require_method(s, Method::HotHb);
  const ObjectiveSpec f{ObjectiveKind::Regularized, g.mu};

  ParamVector theta_next =
      ParamVector::combine(1.0 - g.beta, s.theta, g.beta, *s.vartheta);
  guard(theta_next, s.k);

  ParamVector grad_next = objective_gradient(sample, theta_next, s.theta0, f);
  if (!grad_next.is_finite()) throw NonFiniteGradient(s.k);
  ParamVector vartheta_next = *s.vartheta;
  vartheta_next.axpy(-g.gamma, grad_next);
  guard(vartheta_next, s.k);

  TunerState out = s;
  out.k = s.k + 1;
  out.theta = std::move(theta_next);
  out.vartheta = std::move(vartheta_next);
  return out;
}

TunerState gd_step(const TunerState& s, const ObjectiveSample& sample,
                   double alpha_bar, const ObjectiveSpec& obj) {
  require_method(s, Method::GdFixed);
  ParamVector grad = objective_gradient(sample, s.theta, s.theta0, obj);
  if (!grad.is_finite()) throw NonFiniteGradient(s.k);
  TunerState out = s;
  out.k = s.k + 1;
  out.theta.axpy(-alpha_bar, grad);
  guard(out.theta, s.k);
  return out;
}

TunerState ngd_step(const TunerState& s, const ObjectiveSample& sample,
                    double gamma, bool unchecked) {
  require_method(s, Method::GdNormalized);
  if (!unchecked && !(gamma > 0.0 && gamma < 2.0))
    throw std::domain_error("ngd gamma not in (0,2)");
  ParamVector grad = checked_gradient(sample, s.theta, s.k);
  TunerState out = s;
  out.k = s.k + 1;
  out.theta.axpy(-gamma / sample.normalization, grad);
  guard(out.theta, s.k);
  return out;
}

namespace {

TunerState nesterov_common(const TunerState& s, const ObjectiveSample& sample,
                           double alpha_bar, double beta_bar,
                           const ObjectiveSpec& obj, double iota_next) {
  ParamVector grad = objective_gradient(sample, *s.nu, s.theta0, obj);
  if (!grad.is_finite()) throw NonFiniteGradient(s.k);

  ParamVector theta_next = *s.nu;
  theta_next.axpy(-alpha_bar, grad);
  guard(theta_next, s.k);
  // nu_{k+1} = (1 + beta_bar) theta_{k+1} - beta_bar theta_k
  ParamVector nu_next =
      ParamVector::combine(1.0 + beta_bar, theta_next, -beta_bar, s.theta);
  guard(nu_next, s.k);

  TunerState out = s;
  out.k = s.k + 1;
  out.theta = std::move(theta_next);
  out.nu = std::move(nu_next);
  if (s.iota) out.iota = iota_next;
  return out;
}

}  // namespace

TunerState nesterov_const_step(const TunerState& s,
                               const ObjectiveSample& sample, double alpha_bar,
                               double beta_bar, const ObjectiveSpec& obj) {
  require_method(s, Method::NesterovConst);
  return nesterov_common(s, sample, alpha_bar, beta_bar, obj, 0.0);
}

TunerState nesterov_tv_step(const TunerState& s, const ObjectiveSample& sample,
                            double alpha_bar, const ObjectiveSpec& obj) {
  require_method(s, Method::NesterovTv);
  const double iota = *s.iota;
  const double iota_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * iota * iota));
  const double beta_bar = (iota - 1.0) / iota_next;
  return nesterov_common(s, sample, alpha_bar, beta_bar, obj, iota_next);
}

TunerState heavy_ball_step(const TunerState& s, const ObjectiveSample& sample,
                           double alpha_bar, double beta_bar,
                           const ObjectiveSpec& obj) {
  require_method(s, Method::HeavyBall);
  if (!s.theta_prev) throw std::invalid_argument("heavy ball needs theta_prev");
  ParamVector grad = objective_gradient(sample, s.theta, s.theta0, obj);
  if (!grad.is_finite()) throw NonFiniteGradient(s.k);

  ParamVector theta_next =
      ParamVector::combine(1.0 + beta_bar, s.theta, -beta_bar, *s.theta_prev);
  theta_next.axpy(-alpha_bar, grad);
  guard(theta_next, s.k);

  TunerState out = s;
  out.k = s.k + 1;
  out.theta_prev = s.theta;
  out.theta = std::move(theta_next);
  return out;
}

}  // namespace hot
