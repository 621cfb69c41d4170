#include "hotuner/hardfn.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hot {

namespace {

// Thomas solve of (shift*I - A) x = rhs for the tridiagonal A described in
// the header. shift must exceed lambda_max(A) so the system is SPD.
void shifted_solve(int n, double b, double c, double shift,
                   const std::vector<double>& rhs, std::vector<double>& x,
                   std::vector<double>& cw, std::vector<double>& dw) {
  const double corner = shift - (b + c);
  const double interior = shift - 2.0 * c;
  const double off = c;  // off-diagonal of shift*I - A is -(-c) = +c
  cw.assign(n, 0.0);
  dw.assign(n, 0.0);
  cw[0] = off / corner;
  dw[0] = rhs[0] / corner;
  for (int i = 1; i < n; ++i) {
    const double diag = (i == n - 1) ? corner : interior;
    const double m = diag - off * cw[i - 1];
    cw[i] = off / m;
    dw[i] = (rhs[i] - off * dw[i - 1]) / m;
  }
  x.assign(n, 0.0);
  x[n - 1] = dw[n - 1];
  for (int i = n - 2; i >= 0; --i) x[i] = dw[i] - cw[i] * x[i + 1];
}

}  // namespace

double tridiag_lambda_max(int n, double b, double c) {
  if (n < 2) throw std::domain_error("n must be >= 2");
  if (!(b > 0.0 && c > 0.0)) throw std::domain_error("b, c must be positive");
  if (n == 2) {
    // 2x2 case: eigenvalues b+c +- c
    return b + 2.0 * c;
  }
  // Gershgorin upper bound; the small relative shift keeps shift*I - A
  // positive definite even if the bound is attained.
  const double gersh = std::max(b + 2.0 * c, 4.0 * c);
  const double shift = gersh * (1.0 + 1e-6);

  std::vector<double> v(n, 1.0), w, cw, dw;
  double lambda = 0.0, lambda_prev = -1.0;
  const int max_iters = 100000;
  for (int it = 0; it < max_iters; ++it) {
    shifted_solve(n, b, c, shift, v, w, cw, dw);
    // Rayleigh quotient of the inverted operator -> eigenvalue of A
    double vw = 0.0, vv = 0.0;
    for (int i = 0; i < n; ++i) {
      vw += v[i] * w[i];
      vv += v[i] * v[i];
    }
    const double mu = vw / vv;  // approx 1/(shift - lambda)
    lambda = shift - 1.0 / mu;
    double wn = 0.0;
    for (int i = 0; i < n; ++i) wn += w[i] * w[i];
    wn = std::sqrt(wn);
    if (!(wn > 0.0)) throw std::runtime_error("power iteration broke down");
    for (int i = 0; i < n; ++i) v[i] = w[i] / wn;
    if (it > 0 && std::abs(lambda - lambda_prev) <=
                      1e-10 * std::max(1.0, std::abs(lambda)))
      return lambda;
    lambda_prev = lambda;
  }
  throw std::runtime_error("power iteration did not converge in 1e5 steps");
}

double HardProblem::loss(long k, const ParamVector& theta) const {
  if (static_cast<int>(theta.dim()) != n)
    throw DimensionMismatch("hard problem dimension");
  const double ak = a(k), bk = b(k), ck = c(k), dk = d(k);
  double quad = bk * theta[0] * theta[0] + bk * theta[n - 1] * theta[n - 1];
  for (int i = 0; i + 1 < n; ++i) {
    const double diff = theta[i] - theta[i + 1];
    quad += ck * diff * diff;
  }
  return (ak / 4.0) * (0.5 * quad - dk * theta[0]);
}

ParamVector HardProblem::gradient(long k, const ParamVector& theta) const {
  if (static_cast<int>(theta.dim()) != n)
    throw DimensionMismatch("hard problem dimension");
  const double ak = a(k), bk = b(k), ck = c(k), dk = d(k);
  ParamVector g(theta.dim());
  const double s = ak / 4.0;
  for (int i = 0; i < n; ++i) {
    const double diag = (i == 0 || i == n - 1) ? bk + ck : 2.0 * ck;
    double v = diag * theta[i];
    if (i > 0) v -= ck * theta[i - 1];
    if (i + 1 < n) v -= ck * theta[i + 1];
    g[i] = s * v;
  }
  g[0] -= s * dk;
  return g;
}

ParamVector HardProblem::theta_star(long k) const {
  const double bk = b(k), ck = c(k), dk = d(k);
  if (!(bk > 0.0)) throw std::domain_error("theta_star needs b > 0");
  const double denom = (n - 1) * bk * bk + 2.0 * bk * ck;
  ParamVector t(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    t[i - 1] = dk * ((n - i) * bk + ck) / denom;
  return t;
}

double HardProblem::optimal_value(long k) const {
  const double ak = a(k);
  if (b(k) == 1.0 && c(k) == 1.0 && d(k) == 1.0)
    return (ak / 8.0) * (-1.0 + 1.0 / (n + 1.0));
  return loss(k, theta_star(k));
}

double HardProblem::lambda_max(long k) const {
  const std::pair<double, double> key{b(k), c(k)};
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto it = cache_->values.find(key);
  if (it != cache_->values.end()) return it->second;
  const double lm = tridiag_lambda_max(n, key.first, key.second);
  cache_->values.emplace(key, lm);
  return lm;
}

double HardProblem::opnorm_sq(long k) const {
  return a(k) / 8.0 * lambda_max(k);
}

double HardProblem::normalization(long k) const {
  return 1.0 + opnorm_sq(k);
}

double HardProblem::smoothness(long k) const {
  return a(k) / 4.0 * lambda_max(k);
}

ObjectiveSample HardProblem::sample(long k) const {
  ObjectiveSample s;
  s.k = k;
  s.normalization = normalization(k);
  s.theta_star = theta_star(k);
  s.optimal_value = optimal_value(k);
  // captured copy shares the lambda-max cache and keeps the sample valid
  // past the problem's lifetime
  s.loss = [p = *this, k](const ParamVector& th) { return p.loss(k, th); };
  s.gradient = [p = *this, k](const ParamVector& th) {
    return p.gradient(k, th);
  };
  return s;
}

}  // namespace hot
