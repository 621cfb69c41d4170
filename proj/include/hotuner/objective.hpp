#pragma once
// Per-iteration objective oracle and the raw hyperparameter triple.

#include <functional>
#include <optional>

#include "hotuner/param_vector.hpp"

namespace hot {

// One step's view of the streaming objective: loss L_k, its gradient, the
// normalization signal N_k = 1 + squared operator norm of the regressor, and
// (when the generator knows them) the true parameter and optimal value.
struct ObjectiveSample {
  long k = 0;
  double normalization = 1.0;  // N_k, always >= 1
  std::function<double(const ParamVector&)> loss;
  std::function<ParamVector(const ParamVector&)> gradient;
  std::optional<ParamVector> theta_star;
  std::optional<double> optimal_value;
};

// theta^T phi - y
double prediction_error(const ParamVector& phi, const ParamVector& theta,
                        double y);

// grad L_k(theta)/N_k + mu*(theta - theta0)
ParamVector regularized_gradient(const ObjectiveSample& sample,
                                 const ParamVector& theta,
                                 const ParamVector& theta0, double mu);

struct Gains {
  double gamma = 0.0;
  double beta = 0.0;
  double mu = 0.0;
};

enum class GainsPolicy { Strict, Unchecked };

// Largest admissible gamma for the two-call tuner: beta(2-beta) over
// 16 + beta^2 + mu*(57 beta + 1)/(16 beta). mu = 0 drops the last term.
double hot_gamma_max(double beta, double mu);

// Largest admissible gamma for the single-call (heavy-ball style) tuner:
// beta(2-beta) over 16 + mu*157/48.
double hb_gamma_max(double beta, double mu);

// Throw std::domain_error unless the gains satisfy the stability conditions
// (mu = 0 and mu > 0 cases have different gamma caps). Unchecked only
// requires positivity, for reproducing deliberately unstable runs.
void validate_hot_gains(const Gains& g, GainsPolicy policy = GainsPolicy::Strict);
void validate_hb_gains(const Gains& g, GainsPolicy policy = GainsPolicy::Strict);

bool hot_gains_valid(const Gains& g) noexcept;
bool hb_gains_valid(const Gains& g) noexcept;

}  // namespace hot
