#pragma once
// State and one-step update rules for the seven iterative methods.

#include <optional>
#include <string_view>

#include "hotuner/objective.hpp"
#include "hotuner/param_vector.hpp"

namespace hot {

enum class Method {
  GdFixed,
  GdNormalized,
  NesterovTv,
  NesterovConst,
  HeavyBall,
  Hot,
  HotHb,
};

// Short tag used in file names and configs ("gd", "ngd", "nesterov_tv",
// "nesterov_const", "heavy_ball", "hot", "hot_hb").
std::string_view method_tag(Method m);
// Human-readable name used in plot legends.
std::string_view method_display_name(Method m);
std::optional<Method> method_from_tag(std::string_view tag);

// Which objective a baseline step differentiates: the raw loss L_k, the
// normalized loss L_k/N_k, or the normalized loss plus the
// mu/2*||theta-theta0||^2 regularizer.
enum class ObjectiveKind { Raw, Normalized, Regularized };

struct ObjectiveSpec {
  ObjectiveKind kind = ObjectiveKind::Raw;
  double mu = 0.0;  // used by Regularized only
};

struct TunerState {
  Method method = Method::GdFixed;
  long k = 0;
  ParamVector theta;
  ParamVector theta0;  // frozen initial estimate, anchors the regularizer
  std::optional<ParamVector> vartheta;    // Hot, HotHb
  std::optional<ParamVector> nu;          // Nesterov variants
  std::optional<ParamVector> theta_prev;  // HeavyBall
  std::optional<double> iota;             // NesterovTv momentum counter

  static TunerState gd(ParamVector theta0);
  static TunerState ngd(ParamVector theta0);
  static TunerState nesterov_const(ParamVector theta0);
  static TunerState nesterov_tv(ParamVector theta0);
  // theta_prev starts equal to theta0, making the first step a plain
  // gradient step.
  static TunerState heavy_ball(ParamVector theta0);
  // vartheta0 defaults to theta0.
  static TunerState hot(ParamVector theta0,
                        std::optional<ParamVector> vartheta0 = {});
  static TunerState hot_hb(ParamVector theta0,
                           std::optional<ParamVector> vartheta0 = {});

  // Generic constructor dispatching on the tag.
  static TunerState initial(Method m, ParamVector theta0);
};

// Two gradient calls per step: one at theta_k inside the look-ahead, one at
// the new theta_{k+1} for the slow state.
TunerState hot_step(const TunerState& s, const ObjectiveSample& sample,
                    const Gains& gains);

// Single gradient call per step, evaluated at the new theta.
TunerState hot_hb_step(const TunerState& s, const ObjectiveSample& sample,
                       const Gains& gains);

TunerState gd_step(const TunerState& s, const ObjectiveSample& sample,
                   double alpha_bar, const ObjectiveSpec& obj = {});

// theta <- theta - gamma * grad L / N; requires 0 < gamma < 2 unless
// unchecked.
TunerState ngd_step(const TunerState& s, const ObjectiveSample& sample,
                    double gamma, bool unchecked = false);

TunerState nesterov_const_step(const TunerState& s,
                               const ObjectiveSample& sample, double alpha_bar,
                               double beta_bar, const ObjectiveSpec& obj = {});

// Momentum weight beta_bar_k = (iota_k - 1)/iota_{k+1} with the usual
// iota recursion advanced on every call.
TunerState nesterov_tv_step(const TunerState& s, const ObjectiveSample& sample,
                            double alpha_bar, const ObjectiveSpec& obj = {});

TunerState heavy_ball_step(const TunerState& s, const ObjectiveSample& sample,
                           double alpha_bar, double beta_bar,
                           const ObjectiveSpec& obj = {});

// Gradient of the selected objective at theta.
ParamVector objective_gradient(const ObjectiveSample& sample,
                               const ParamVector& theta,
                               const ParamVector& theta0,
                               const ObjectiveSpec& obj);
// Value of the selected objective at theta.
double objective_value(const ObjectiveSample& sample, const ParamVector& theta,
                       const ParamVector& theta0, const ObjectiveSpec& obj);

}  // namespace hot
