#include "hotuner/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "hotuner/deblur.hpp"
#include "hotuner/gains.hpp"
#include "hotuner/lyapunov.hpp"
#include "hotuner/streams.hpp"
#include "hotuner/trace.hpp"

namespace hot {

namespace {

struct CheckBuilder {
  std::string name;
  bool pass = true;
  double slack = std::numeric_limits<double>::infinity();
  std::string detail;

  void observe(double margin) {
    slack = std::min(slack, margin);
    if (margin < 0.0) pass = false;
  }
  CheckResult done() && { return {name, pass, slack, detail}; }
};

// ---------------------------------------------------------------- lyapunov

// Runs one tuner variant over a stream and feeds every per-step certificate
// margin into the builder.
void check_tuner_over_stream(CheckBuilder& cb, Method method, const Gains& g,
                             const RegressionStream& stream, long steps) {
  TunerState s = TunerState::initial(method, ParamVector::zeros(stream.theta_star.dim()));
  double v0 = std::numeric_limits<double>::quiet_NaN();
  for (long k = 0; k < steps; ++k) {
    const ObjectiveSample smp = stream.sample(k);
    if (std::isnan(v0)) v0 = lyapunov_value(s, stream.theta_star, g.gamma);
    const TunerState next = method == Method::Hot ? hot_step(s, smp, g)
                                                  : hot_hb_step(s, smp, g);
    const LyapunovRecord rec =
        check_tuner_step(smp, s, next, g, stream.theta_star, v0);
    const double tol = 1e-9 * std::max(1.0, std::abs(rec.V));
    cb.observe(rec.rhs_bound + tol - rec.delta_V);
    cb.observe(rec.envelope + tol - rec.V);
    s = next;
  }
}

void check_ngd_over_stream(CheckBuilder& cb, double gamma,
                           const RegressionStream& stream, long steps) {
  TunerState s = TunerState::ngd(ParamVector::zeros(stream.theta_star.dim()));
  for (long k = 0; k < steps; ++k) {
    const ObjectiveSample smp = stream.sample(k);
    const ParamVector tilde_before = s.theta - stream.theta_star;
    const TunerState next = ngd_step(s, smp, gamma);
    const ParamVector tilde_after = next.theta - stream.theta_star;
    const double e_y = std::sqrt(2.0 * smp.loss(s.theta));
    const LyapunovRecord rec =
        ngd_check(tilde_before, tilde_after, e_y, smp.normalization, gamma);
    const double tol = 1e-9 * std::max(1.0, std::abs(rec.V));
    cb.observe(rec.rhs_bound + tol - rec.delta_V);
    s = next;
  }
}

std::vector<CheckResult> lyapunov_suite() {
  constexpr int kStreams = 100;
  constexpr long kSteps = 500;
  constexpr std::size_t kDim = 5;
  constexpr double kMaxMag = 1e3;

  const Gains hot_mu0{hot_gamma_max(0.5, 0.0), 0.5, 0.0};
  const Gains hot_mu{hot_gamma_max(0.5, 5e-2), 0.5, 5e-2};
  const Gains hb_mu0{hb_gamma_max(1.0, 0.0), 1.0, 0.0};
  const Gains hb_mu{hb_gamma_max(0.5, 5e-2), 0.5, 5e-2};

  CheckBuilder hot0{"hot-decrement-and-monotone-V(mu=0)"};
  CheckBuilder hotr{"hot-bound-and-envelope(mu=5e-2)"};
  CheckBuilder hb0{"hot-hb-decrement-and-monotone-V(mu=0)"};
  CheckBuilder hbr{"hot-hb-bound-and-envelope(mu=5e-2)"};
  CheckBuilder ngd{"ngd-decrement(gamma=0.5,1,1.9)"};

  for (int si = 0; si < kStreams; ++si) {
    const RegressionStream stream =
        adversarial_stream(1000 + static_cast<std::uint64_t>(si), kDim, kMaxMag);
    check_tuner_over_stream(hot0, Method::Hot, hot_mu0, stream, kSteps);
    check_tuner_over_stream(hotr, Method::Hot, hot_mu, stream, kSteps);
    check_tuner_over_stream(hb0, Method::HotHb, hb_mu0, stream, kSteps);
    check_tuner_over_stream(hbr, Method::HotHb, hb_mu, stream, kSteps);
    for (double gamma : {0.5, 1.0, 1.9})
      check_ngd_over_stream(ngd, gamma, stream, kSteps);
  }
  const std::string detail = "100 adversarial streams, dim 5, |phi| up to 1e3, 500 steps";
  hot0.detail = hotr.detail = hb0.detail = hbr.detail = ngd.detail = detail;
  std::vector<CheckResult> out;
  out.push_back(std::move(hot0).done());
  out.push_back(std::move(hotr).done());
  out.push_back(std::move(hb0).done());
  out.push_back(std::move(hbr).done());
  out.push_back(std::move(ngd).done());
  return out;
}

// ------------------------------------------------------------- equivalence

struct FixedQuadratic {
  ParamVector phi;
  ParamVector theta_star;
  ParamVector theta0;
  ObjectiveSample sample;
};

FixedQuadratic random_quadratic(std::uint64_t seed, std::size_t dim) {
  Rng rng(substream_seed(seed, 11));
  FixedQuadratic q;
  q.phi = ParamVector(dim);
  q.theta_star = ParamVector(dim);
  q.theta0 = ParamVector(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    q.phi[i] = 3.0 * rng.symmetric();
    q.theta_star[i] = rng.symmetric();
    q.theta0[i] = rng.symmetric();
  }
  RegressionStream stream{q.theta_star, [phi = q.phi](long) { return phi; }};
  q.sample = stream.sample(0);
  return q;
}

double rel_deviation(const ParamVector& a, const ParamVector& b) {
  return std::sqrt(a.distance_sq(b)) / std::max(1.0, std::sqrt(a.norm_sq()));
}

std::vector<CheckResult> equivalence_suite() {
  constexpr int kProblems = 20;
  constexpr long kSteps = 200;
  constexpr std::size_t kDim = 5;

  CheckBuilder nesterov_traj{"hot-vs-nesterov-const-trajectory"};
  CheckBuilder hb_traj{"hot-hb-vs-heavy-ball-trajectory"};
  CheckBuilder hot_recursion{"hot-two-step-recursion"};
  CheckBuilder hb_recursion{"hot-hb-two-step-recursion"};

  for (int pi = 0; pi < kProblems; ++pi) {
    const FixedQuadratic q = random_quadratic(500 + static_cast<std::uint64_t>(pi), kDim);
    Rng rng(substream_seed(9000 + static_cast<std::uint64_t>(pi), 3));
    const double beta = 0.05 + 0.9 * rng.uniform01();
    const double mu = (pi % 2 == 0) ? 0.0 : 0.3 * rng.uniform01();
    const double gamma = hot_gamma_max(beta, mu) * (0.2 + 0.8 * rng.uniform01());
    const Gains g{gamma, beta, mu};
    const double alpha_bar = gamma * beta;
    const double beta_bar = 1.0 - beta;
    const ObjectiveSpec reg{ObjectiveKind::Regularized, mu};

    // two-call tuner against the momentum form, vartheta0 = theta0 - gamma
    // beta grad f(theta0)
    {
      ParamVector vartheta0 = q.theta0;
      vartheta0.axpy(-gamma * beta,
                     regularized_gradient(q.sample, q.theta0, q.theta0, mu));
      TunerState hot_state = TunerState::hot(q.theta0, vartheta0);
      TunerState nest = TunerState::nesterov_const(q.theta0);
      std::vector<ParamVector> thetas{hot_state.theta};
      std::vector<ParamVector> grads{
          regularized_gradient(q.sample, hot_state.theta, q.theta0, mu)};
      for (long k = 0; k < kSteps; ++k) {
        hot_state = hot_step(hot_state, q.sample, g);
        nest = nesterov_const_step(nest, q.sample, alpha_bar, beta_bar, reg);
        nesterov_traj.observe(1e-10 - rel_deviation(hot_state.theta, nest.theta));
        thetas.push_back(hot_state.theta);
        grads.push_back(
            regularized_gradient(q.sample, hot_state.theta, q.theta0, mu));
      }
      // eliminated two-step recursion over the recorded trajectory
      for (std::size_t k = 0; k + 2 < thetas.size(); ++k) {
        ParamVector pred =
            ParamVector::combine(2.0 - beta, thetas[k + 1], -(1.0 - beta), thetas[k]);
        pred.axpy(-gamma * beta * (2.0 - beta), grads[k + 1]);
        pred.axpy(gamma * beta * (1.0 - beta), grads[k]);
        hot_recursion.observe(1e-10 - rel_deviation(thetas[k + 2], pred));
      }
    }

    // single-call tuner against the heavy-ball form, vartheta0 = theta0 -
    // gamma grad f(theta0) lines it up with the theta_prev = theta0 start
    {
      ParamVector vartheta0 = q.theta0;
      vartheta0.axpy(-gamma,
                     regularized_gradient(q.sample, q.theta0, q.theta0, mu));
      TunerState tuner = TunerState::hot_hb(q.theta0, vartheta0);
      TunerState ball = TunerState::heavy_ball(q.theta0);
      std::vector<ParamVector> thetas{tuner.theta};
      for (long k = 0; k < kSteps; ++k) {
        tuner = hot_hb_step(tuner, q.sample, g);
        ball = heavy_ball_step(ball, q.sample, alpha_bar, beta_bar, reg);
        hb_traj.observe(1e-10 - rel_deviation(tuner.theta, ball.theta));
        thetas.push_back(tuner.theta);
      }
      for (std::size_t k = 0; k + 2 < thetas.size(); ++k) {
        ParamVector pred =
            ParamVector::combine(2.0 - beta, thetas[k + 1], -(1.0 - beta), thetas[k]);
        pred.axpy(-gamma * beta,
                  regularized_gradient(q.sample, thetas[k + 1], q.theta0, mu));
        hb_recursion.observe(1e-10 - rel_deviation(thetas[k + 2], pred));
      }
    }
  }

  const std::string detail = "20 random constant-regressor quadratics, 200 steps";
  nesterov_traj.detail = hb_traj.detail = detail;
  hot_recursion.detail = hb_recursion.detail = "eliminated recursion re-verified numerically";
  std::vector<CheckResult> out;
  out.push_back(std::move(nesterov_traj).done());
  out.push_back(std::move(hb_traj).done());
  out.push_back(std::move(hot_recursion).done());
  out.push_back(std::move(hb_recursion).done());
  return out;
}

// ------------------------------------------------------------------ bounds

void expect_near(std::vector<CheckResult>& out, const std::string& name,
                 double got, double want, double tol) {
  std::ostringstream d;
  d << "got " << format_double(got) << ", want " << format_double(want)
    << " (tol " << tol << ")";
  out.push_back({name, std::abs(got - want) <= tol, tol - std::abs(got - want),
                 d.str()});
}

std::vector<CheckResult> bounds_suite() {
  std::vector<CheckResult> out;
  expect_near(out, "hot-gamma-max(0.1,1e-5)", hot_gamma_max(0.1, 1e-5), 0.01186,
              1e-5);
  expect_near(out, "hot-gamma-max(0.1,0)", hot_gamma_max(0.1, 0.0),
              0.19 / 16.01, 1e-15);
  expect_near(out, "hb-gamma-max(1,0)", hb_gamma_max(1.0, 0.0), 0.0625, 1e-15);
  expect_near(out, "hb-gamma-max(0.1,0)", hb_gamma_max(0.1, 0.0), 0.011875,
              1e-15);
  expect_near(out, "hb-gamma-max(1,0.48)", hb_gamma_max(1.0, 0.48),
              1.0 / 17.57, 1e-12);

  {
    const DerivedGains d = schedule_for_gap(1.0, 1.0);
    expect_near(out, "schedule(1,1).mu", d.mu, 1.0, 0.0);
    expect_near(out, "schedule(1,1).beta_bar", d.beta_bar,
                (std::sqrt(2.0) - 1.0) / (std::sqrt(2.0) + 1.0), 1e-15);
  }
  {
    const DerivedGains d = schedule_for_gap(1e-3, 269.0);
    expect_near(out, "schedule(1e-3,269).mu", d.mu, 3.7174e-6, 1e-9);
    expect_near(out, "schedule-identity mu*psi", d.mu * d.psi, d.epsilon,
                1e-18);
    expect_near(out, "schedule-identity alpha*L", d.alpha_bar * d.L_bar, 1.0,
                1e-15);
  }
  {
    // feeding psi through the full pipeline reproduces the plain schedule
    const double psi = 37.5, n0 = 4.0;
    ParamVector theta0{0.0, 0.0};
    ParamVector star{std::sqrt(psi / n0), 0.0};
    const DerivedGains a = gains_from_initial_data(n0 - 1.0, theta0, star, 1.0, 1e-2);
    const DerivedGains b = schedule_for_gap(1e-2, psi);
    expect_near(out, "pipeline-composition gamma", a.gamma, b.gamma,
                1e-12 * b.gamma);
    expect_near(out, "pipeline-composition mu", a.mu, b.mu, 1e-15);
  }

  expect_near(out, "iters-gd(1,1,0.01)",
              static_cast<double>(iterations_to_gap(Method::GdFixed, 1, 1, 0.01)),
              196.0, 0.0);
  expect_near(out, "iters-nesterov(1,1,0.01)",
              static_cast<double>(iterations_to_gap(Method::NesterovTv, 1, 1, 0.01)),
              16.0, 0.0);
  {
    CheckBuilder order{"iteration-count-ordering"};
    for (double eps = 1e-4; eps >= 1e-12; eps *= 1e-2) {
      const long gd = iterations_to_gap(Method::GdFixed, 1, 1, eps);
      const long ho = iterations_to_gap(Method::Hot, 1, 1, eps);
      const long ne = iterations_to_gap(Method::NesterovTv, 1, 1, eps);
      order.observe(static_cast<double>(ho - ne));
      order.observe(static_cast<double>(gd - ho));
    }
    order.detail = "nesterov <= hot <= gd for eps <= 1e-4";
    out.push_back(std::move(order).done());
  }
  {
    const DerivedGains d = hb_gains_for_quadratic(4.0, 1.0);
    expect_near(out, "hb-quadratic(4,1).alpha", d.alpha_bar, 4.0 / 9.0, 1e-15);
    expect_near(out, "hb-quadratic(4,1).beta_bar", d.beta_bar, 1.0 / 9.0, 1e-15);
    CheckBuilder ident{"hb-quadratic-beta-bar-identity"};
    Rng rng(42);
    for (int i = 0; i < 20; ++i) {
      const double mu = 0.1 + rng.uniform01();
      const double L = mu * (1.0 + 99.0 * rng.uniform01());
      const DerivedGains h = hb_gains_for_quadratic(L, mu);
      const double rk = std::sqrt(L / mu);
      const double want = (rk - 1.0) / (rk + 1.0);
      ident.observe(1e-12 - std::abs(h.beta_bar - want * want));
    }
    out.push_back(std::move(ident).done());
  }
  expect_near(out, "lower-bound(32,1,1)", first_order_lower_bound(32, 1, 1),
              0.75, 1e-15);
  {
    CheckBuilder ratio{"lower-bound-quadratic-decay"};
    for (long k : {1L, 5L, 40L, 333L}) {
      const double r = first_order_lower_bound(2.0, 1.0, 2 * k + 1) /
                       first_order_lower_bound(2.0, 1.0, k);
      ratio.observe(1e-12 - std::abs(r - 0.25));
    }
    out.push_back(std::move(ratio).done());
  }
  {
    const Gains g{0.01186, 0.1, 1e-5};
    const EnvelopeCoeffs c = hot_envelope_coeffs(g, 1.0);
    expect_near(out, "hot-envelope-decay(0.1,0.01186)", c.decay, 0.0007413, 1e-7);
    expect_near(out, "hot-envelope-offset-factor(0.1)", c.offset, 55.9375, 1e-12);
    const EnvelopeCoeffs ch = hb_envelope_coeffs(Gains{0.08, 0.5, 0.0}, 1.0);
    expect_near(out, "hb-envelope-decay(0.08)", ch.decay, 0.01, 1e-15);
    expect_near(out, "hb-envelope-offset-factor", ch.offset, 189.0 / 64.0, 1e-15);
  }
  {
    CheckBuilder edge{"gamma-validation-boundary"};
    const double beta = 0.3, mu = 0.05;
    const Gains at_bound{hot_gamma_max(beta, mu), beta, mu};
    edge.observe(hot_gains_valid(at_bound) ? 1.0 : -1.0);
    Gains over = at_bound;
    over.gamma *= 1.0 + 1e-6;
    edge.observe(hot_gains_valid(over) ? -1.0 : 1.0);
    edge.detail = "gamma at the cap passes, 1e-6 above fails";
    out.push_back(std::move(edge).done());
  }
  return out;
}

// ----------------------------------------------------------- deblur-oracle

// Direct circular convolution with the kernel centered at ((s-1)/2,(s-1)/2).
Image circular_convolve(const PsfKernel& psf, const Image& img) {
  Image out(img.rows, img.cols);
  const int c = (psf.size - 1) / 2;
  for (int r = 0; r < img.rows; ++r) {
    for (int q = 0; q < img.cols; ++q) {
      double acc = 0.0;
      for (int i = 0; i < psf.size; ++i) {
        for (int j = 0; j < psf.size; ++j) {
          const int rr = ((r - (i - c)) % img.rows + img.rows) % img.rows;
          const int qq = ((q - (j - c)) % img.cols + img.cols) % img.cols;
          acc += psf.at(i, j) * img.at(rr, qq);
        }
      }
      out.at(r, q) = acc;
    }
  }
  return out;
}

std::vector<CheckResult> deblur_oracle_suite() {
  std::vector<CheckResult> out;
  const Image img = noise_image(32, 32, 2024);
  const ComplexGrid img_spec = spectrum_of(img);

  CheckBuilder conv{"spectrum-multiply-vs-spatial-convolution"};
  CheckBuilder dc{"normalized-psf-unit-operator-norm"};
  for (int size : {1, 3, 9, 11}) {
    for (double sigma : {0.5, 1.5, 7.0}) {
      const PsfKernel psf = psf_gauss(size, sigma);
      const BlurSpectrum spec = blur_operator(psf, 32, 32);
      dc.observe(1e-12 - std::abs(spec.coeff[0] - 1.0));       // DC term
      dc.observe(1e-12 - std::abs(spec.opnorm_sq() - 1.0));    // |phi|^2 = 1

      const ComplexGrid conv_spec = spectrum_of(circular_convolve(psf, img));
      double max_diff = 0.0;
      for (std::size_t i = 0; i < spec.pixels(); ++i) {
        const double pr = spec.coeff[2 * i], pi = spec.coeff[2 * i + 1];
        const double xr = img_spec.data[2 * i], xi = img_spec.data[2 * i + 1];
        const double mr = pr * xr - pi * xi;
        const double mi = pr * xi + pi * xr;
        max_diff = std::max(max_diff, std::abs(mr - conv_spec.data[2 * i]));
        max_diff = std::max(max_diff, std::abs(mi - conv_spec.data[2 * i + 1]));
      }
      conv.observe(1e-8 - max_diff);
    }
  }
  conv.detail = "psf sizes {1,3,9,11} x sigma {0.5,1.5,7} on a seeded 32x32 image";
  out.push_back(std::move(conv).done());
  out.push_back(std::move(dc).done());

  {
    // Parseval: frequency loss = rows*cols * spatial loss
    CheckBuilder pars{"parseval-frequency-vs-spatial-loss"};
    const PsfKernel psf = psf_gauss(9, 1.5);
    const BlurSpectrum spec = blur_operator(psf, 32, 32);
    const Image truth = noise_image(32, 32, 77);
    const Image blurred = circular_convolve(psf, truth);
    const Image guess = noise_image(32, 32, 78);
    // spatial residual ||blur(guess) - blurred||^2 / 2
    const Image bg = circular_convolve(psf, guess);
    double spatial = 0.0;
    for (std::size_t i = 0; i < bg.px.size(); ++i) {
      const double dpx = bg.px[i] - blurred.px[i];
      spatial += dpx * dpx;
    }
    spatial *= 0.5;
    const ObjectiveSample smp =
        deblur_sample(spec, spectrum_of(blurred).data, 0);
    const double freq = smp.loss(spectrum_as_param(spectrum_of(guess)));
    const double want = 32.0 * 32.0 * spatial;
    pars.observe(1e-8 - std::abs(freq - want) / want);
    pars.detail = "freq loss " + format_double(freq) + " vs n*m*spatial " +
                  format_double(want);
    out.push_back(std::move(pars).done());
  }
  return out;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"lyapunov", "equivalence",
                                                 "bounds", "deblur-oracle"};
  return names;
}

std::vector<CheckResult> run_verify_suite(const std::string& suite) {
  if (suite == "lyapunov") return lyapunov_suite();
  if (suite == "equivalence") return equivalence_suite();
  if (suite == "bounds") return bounds_suite();
  if (suite == "deblur-oracle") return deblur_oracle_suite();
  throw std::invalid_argument("unknown verify suite '" + suite + "'");
}

std::string check_results_json(const std::string& suite,
                               const std::vector<CheckResult>& results) {
  std::ostringstream os;
  os << "{\n  \"suite\": \"" << suite << "\",\n  \"checks\": [\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const CheckResult& r = results[i];
    os << "    {\"name\": \"" << r.name << "\", \"pass\": "
       << (r.pass ? "true" : "false") << ", \"slack\": " << format_double(r.slack)
       << ", \"detail\": \"" << r.detail << "\"}"
       << (i + 1 < results.size() ? "," : "") << "\n";
  }
  bool all = true;
  for (const CheckResult& r : results) all = all && r.pass;
  os << "  ],\n  \"passed\": " << (all ? "true" : "false") << "\n}\n";
  return os.str();
}

}  // namespace hot
