#include "hotuner/objective.hpp"

#include <stdexcept>

namespace hot {

double prediction_error(const ParamVector& phi, const ParamVector& theta,
                        double y) {
  return theta.dot(phi) - y;
}

ParamVector regularized_gradient(const ObjectiveSample& sample,
                                 const ParamVector& theta,
                                 const ParamVector& theta0, double mu) {
  theta.check_dim(theta0);
  ParamVector g = sample.gradient(theta);
  g.check_dim(theta);
  g *= 1.0 / sample.normalization;
  if (mu != 0.0) {
    g.axpy(mu, theta);
    g.axpy(-mu, theta0);
  }
  return g;
}

double hot_gamma_max(double beta, double mu) {
  if (!(beta > 0.0 && beta < 1.0)) throw std::domain_error("beta not in (0,1)");
  if (!(mu >= 0.0)) throw std::domain_error("mu negative");
  double denom = 16.0 + beta * beta;
  if (mu > 0.0) denom += mu * (57.0 * beta + 1.0) / (16.0 * beta);
  return beta * (2.0 - beta) / denom;
}

double hb_gamma_max(double beta, double mu) {
  if (!(beta > 0.0 && beta < 2.0)) throw std::domain_error("beta not in (0,2)");
  if (!(mu >= 0.0)) throw std::domain_error("mu negative");
  return beta * (2.0 - beta) / (16.0 + mu * (157.0 / 48.0));
}

namespace {
void require_positive(const Gains& g) {
  if (!(g.gamma > 0.0)) throw std::domain_error("gamma must be positive");
  if (!(g.beta > 0.0)) throw std::domain_error("beta must be positive");
  if (!(g.mu >= 0.0)) throw std::domain_error("mu must be nonnegative");
}
}  // namespace

void validate_hot_gains(const Gains& g, GainsPolicy policy) {
  require_positive(g);
  if (policy == GainsPolicy::Unchecked) return;
  if (!(g.beta < 1.0)) throw std::domain_error("beta must be < 1");
  if (g.mu > 0.0 && !(g.mu < 1.0)) throw std::domain_error("mu must be < 1");
  if (!(g.gamma <= hot_gamma_max(g.beta, g.mu)))
    throw std::domain_error("gamma above stability bound");
}

void validate_hb_gains(const Gains& g, GainsPolicy policy) {
  require_positive(g);
  if (policy == GainsPolicy::Unchecked) return;
  if (!(g.beta < 2.0)) throw std::domain_error("beta must be < 2");
  if (g.mu > 0.0 && !(g.mu < 1.0)) throw std::domain_error("mu must be < 1");
  if (!(g.gamma <= hb_gamma_max(g.beta, g.mu)))
    throw std::domain_error("gamma above stability bound");
}

bool hot_gains_valid(const Gains& g) noexcept {
  try {
    validate_hot_gains(g);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

bool hb_gains_valid(const Gains& g) noexcept {
  try {
    validate_hb_gains(g);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace hot
