#pragma once
// Time-varying variant of the classic worst-case smooth convex quadratic:
// L_k(theta) = (a_k/4) { 1/2 [ b_k th_1^2 + c_k sum (th_i - th_{i+1})^2
//                              + b_k th_n^2 ] - d_k th_1 }.
// Gradient is a tridiagonal stencil applied matrix-free; the optimum and
// (for b=c=d=1) the optimal value have closed forms.

#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "hotuner/objective.hpp"
#include "hotuner/param_vector.hpp"
#include "hotuner/schedule.hpp"

namespace hot {

// Largest eigenvalue of the n x n tridiagonal matrix with corner diagonal
// entries b + c, interior diagonal 2c, off-diagonals -c. Power iteration on
// the shift-inverted operator, all-ones start vector, relative tolerance
// 1e-10; throws std::runtime_error if 1e5 iterations do not converge.
double tridiag_lambda_max(int n, double b, double c);

struct HardProblem {
  int n = 2;
  Schedule a, b, c, d;

  double loss(long k, const ParamVector& theta) const;
  ParamVector gradient(long k, const ParamVector& theta) const;
  // (a_k/4) * (A_k theta - D_k), D_k = (d_k, 0, ..., 0)
  ParamVector theta_star(long k) const;  // closed form, independent of a_k
  // Closed form (a_k/8)(-1 + 1/(n+1)) when b = c = d = 1; otherwise falls
  // back to loss(theta_star).
  double optimal_value(long k) const;
  // N_k = 1 + (a_k/8) lambda_max(A_k)
  double normalization(long k) const;
  // Gradient Lipschitz constant (a_k/4) lambda_max(A_k); equals a_k up to
  // the eigenvalue gap when b = c = 1.
  double smoothness(long k) const;
  double opnorm_sq(long k) const;  // (a_k/8) lambda_max(A_k)

  ObjectiveSample sample(long k) const;

 private:
  double lambda_max(long k) const;  // cached per (b_k, c_k), write-once
  struct Cache {
    std::mutex mutex;
    std::map<std::pair<double, double>, double> values;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace hot
