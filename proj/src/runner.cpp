#include "hotuner/runner.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <stdexcept>

#include "hotuner/deblur.hpp"
#include "hotuner/hardfn.hpp"
#include "hotuner/streams.hpp"
#include "hotuner/svg.hpp"

namespace hot {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Schedule schedule_or(const ExperimentConfig& cfg, const std::string& name,
                     Schedule fallback) {
  auto it = cfg.schedules.find(name);
  return it == cfg.schedules.end() ? fallback : it->second;
}

struct ProblemView {
  std::function<ObjectiveSample(long)> sample;
  std::function<double(long)> smoothness;
  ParamVector theta0;
  double opnorm0_sq = 0.0;
  double max_normalization = 1.0;
  std::optional<HardProblem> hard;
  std::optional<DeblurProblem> blur;
};

HardProblem hard_from_config(const ExperimentConfig& cfg) {
  HardProblem p;
  p.n = cfg.dimension;
  p.a = schedule_or(cfg, "a", Schedule::constant(2.0));
  p.b = schedule_or(cfg, "b", Schedule::constant(1.0));
  p.c = schedule_or(cfg, "c", Schedule::constant(1.0));
  p.d = schedule_or(cfg, "d", Schedule::constant(1.0));
  return p;
}

Image image_from_config(const ExperimentConfig& cfg) {
  const int n = cfg.image_size;
  if (cfg.image == "checkerboard") return checkerboard_image(n, n, std::max(1, n / 8));
  if (cfg.image == "gradient") return gradient_image(n, n);
  if (cfg.image == "noise") return noise_image(n, n, cfg.seed);
  return read_pgm(cfg.image);
}

DeblurProblem deblur_from_config(const ExperimentConfig& cfg) {
  return DeblurProblem(image_from_config(cfg), cfg.psf_size,
                       schedule_or(cfg, "sigma", Schedule::constant(7.0)),
                       schedule_or(cfg, "delta", Schedule::constant(1.0)));
}

ProblemView make_problem(const ExperimentConfig& cfg) {
  ProblemView pv;
  if (cfg.experiment == "shp") {
    HardProblem p = hard_from_config(cfg);
    pv.sample = [p](long k) { return p.sample(k); };
    pv.smoothness = [p](long k) { return p.smoothness(k); };
    pv.theta0 = ParamVector::zeros(static_cast<std::size_t>(p.n));
    pv.opnorm0_sq = p.opnorm_sq(0);
    double m = 1.0;
    for (long k = 0; k < std::max(1L, cfg.iters); ++k)
      m = std::max(m, p.normalization(k));
    pv.max_normalization = m;
    pv.hard = std::move(p);
  } else if (cfg.experiment == "deblur") {
    DeblurProblem p = deblur_from_config(cfg);
    pv.sample = [p](long k) { return p.sample(k); };
    // smoothness of the diagonal complex least squares is max |phi|^2
    pv.smoothness = [p](long k) { return p.spectrum(k).opnorm_sq(); };
    pv.theta0 = cfg.theta0 == "zero"
                    ? ParamVector::zeros(p.theta_star().dim())
                    : p.observation(0);
    pv.opnorm0_sq = p.spectrum(0).opnorm_sq();
    pv.max_normalization = p.max_normalization(std::max(1L, cfg.iters));
    pv.blur = std::move(p);
  } else if (cfg.experiment == "synth") {
    const std::size_t dim = static_cast<std::size_t>(cfg.dimension);
    RegressionStream stream =
        cfg.schedules.count("phi_magnitude")
            ? synth_stream(adversarial_stream(cfg.seed, dim, 1.0).theta_star,
                           dim, cfg.schedules.at("phi_magnitude"), cfg.seed)
            : adversarial_stream(cfg.seed, dim, cfg.max_magnitude);
    pv.sample = [stream](long k) { return stream.sample(k); };
    pv.smoothness = [stream](long k) {
      return stream.regressor(k).norm_sq();
    };
    pv.theta0 = ParamVector::zeros(dim);
    pv.opnorm0_sq = stream.regressor(0).norm_sq();
    double m = 1.0;
    for (long k = 0; k < std::max(1L, cfg.iters); ++k)
      m = std::max(m, 1.0 + stream.regressor(k).norm_sq());
    pv.max_normalization = m;
  } else {
    throw std::invalid_argument("runner cannot execute experiment '" +
                                cfg.experiment + "'");
  }
  return pv;
}

ObjectiveKind kind_from(const std::string& s) {
  if (s == "raw") return ObjectiveKind::Raw;
  if (s == "normalized") return ObjectiveKind::Normalized;
  return ObjectiveKind::Regularized;
}

ResolvedGains resolve_gains_impl(const ExperimentConfig& cfg,
                                 const ProblemView& pv) {
  const std::string& mode = cfg.gains.mode;
  ResolvedGains rg;
  const double mu_small =
      cfg.gains.mu > 0.0 ? cfg.gains.mu : 1e-20;  // choices 1-4 default

  if (mode == "manual") {
    rg.tuner = {cfg.gains.gamma, cfg.gains.beta, cfg.gains.mu};
    rg.alpha_bar = rg.tuner.gamma * rg.tuner.beta;
    rg.beta_bar = 1.0 - rg.tuner.beta;
    rg.ngd_gamma = rg.alpha_bar;
  } else if (mode == "lemma") {
    const ObjectiveSample s0 = pv.sample(0);
    const double d2 = pv.theta0.distance_sq(*s0.theta_star);
    const double psi = std::max(1.0, s0.normalization * d2);
    DerivedGains d = schedule_for_gap(cfg.gains.epsilon, psi);
    rg.tuner = {d.gamma, d.beta, d.mu};
    rg.alpha_bar = d.alpha_bar;
    rg.beta_bar = d.beta_bar;
    rg.ngd_gamma = d.alpha_bar;
    rg.derived = d;
  } else if (mode == "choice-a") {
    const double beta = cfg.gains.beta > 0.0 ? cfg.gains.beta : 0.1;
    const double mu = cfg.gains.mu > 0.0 ? cfg.gains.mu : 1e-5;
    rg.tuner = {hot_gamma_max(beta, mu), beta, mu};
    rg.alpha_bar = rg.tuner.gamma * beta;
    rg.beta_bar = 1.0 - beta;
    rg.ngd_gamma = rg.alpha_bar;
  } else if (mode == "choice-b") {
    const ObjectiveSample s0 = pv.sample(0);
    DerivedGains d =
        gains_from_initial_data(pv.opnorm0_sq, pv.theta0, *s0.theta_star,
                                pv.smoothness(0), cfg.gains.epsilon);
    rg.tuner = {d.gamma, d.beta, d.mu};
    rg.alpha_bar = d.alpha_bar;
    rg.beta_bar = d.beta_bar;
    rg.ngd_gamma = d.alpha_bar;
    rg.derived = d;
  } else if (mode == "choice-1" || mode == "choice-2") {
    const double beta = cfg.gains.beta > 0.0 ? cfg.gains.beta : 0.1;
    rg.tuner = {hot_gamma_max(beta, mu_small), beta, mu_small};
    const double gb = rg.tuner.gamma * beta;
    rg.alpha_bar = mode == "choice-1" ? gb / (1.0 + pv.opnorm0_sq)
                                      : gb / pv.max_normalization;
    rg.beta_bar = 1.0 - beta;
    rg.ngd_gamma = rg.alpha_bar;
  } else if (mode == "choice-3" || mode == "choice-4") {
    const double beta = cfg.gains.beta > 0.0 ? cfg.gains.beta : 0.1;
    rg.tuner = {1.0 / beta, beta, mu_small};
    rg.alpha_bar = mode == "choice-3"
                       ? 1.0 / pv.opnorm0_sq
                       : 1.0 / (pv.max_normalization - 1.0);
    rg.beta_bar = 1.0 - beta;
    rg.ngd_gamma = rg.alpha_bar;
  } else {
    throw std::invalid_argument("unknown gains mode '" + mode + "'");
  }

  rg.certified =
      cfg.gains.validation == "strict" && hot_gains_valid(rg.tuner);
  return rg;
}

TunerState step_method(Method m, const TunerState& s,
                       const ObjectiveSample& smp, const ResolvedGains& rg,
                       const ObjectiveSpec& baseline_obj, bool unchecked) {
  switch (m) {
    case Method::GdFixed:
      return gd_step(s, smp, rg.alpha_bar, baseline_obj);
    case Method::GdNormalized:
      return ngd_step(s, smp, rg.ngd_gamma, unchecked);
    case Method::NesterovTv:
      return nesterov_tv_step(s, smp, rg.alpha_bar, baseline_obj);
    case Method::NesterovConst:
      return nesterov_const_step(s, smp, rg.alpha_bar, rg.beta_bar,
                                 baseline_obj);
    case Method::HeavyBall:
      return heavy_ball_step(s, smp, rg.alpha_bar, rg.beta_bar, baseline_obj);
    case Method::Hot:
      return hot_step(s, smp, rg.tuner);
    case Method::HotHb:
      return hot_hb_step(s, smp, rg.tuner);
  }
  throw std::invalid_argument("unknown method");
}

// Distance term of the hard instance a span method can have explored after
// k gradient calls (the (2k+1)-dimensional optimum, started from zero).
// Fresh instance: the lambda-max cache is keyed per dimension.
double lower_bound_dist_sq(const HardProblem& base, long k) {
  HardProblem sub;
  sub.n = std::max(2, static_cast<int>(2 * k + 1));
  sub.a = base.a;
  sub.b = base.b;
  sub.c = base.c;
  sub.d = base.d;
  return sub.theta_star(0).norm_sq();
}

}  // namespace

const MethodTrace& ExperimentResult::trace(Method m) const {
  for (const auto& t : traces)
    if (t.method == m) return t;
  throw std::out_of_range("no trace for method");
}

ResolvedGains resolve_gains(const ExperimentConfig& cfg) {
  return resolve_gains_impl(cfg, make_problem(cfg));
}

std::filesystem::path resolve_output_dir(const ExperimentConfig& cfg) {
  std::filesystem::path dir = cfg.output_dir;
  if (dir.is_relative()) {
    if (const char* root = std::getenv("HOTUNER_OUTPUT_ROOT"))
      dir = std::filesystem::path(root) / dir;
  }
  return dir;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg,
                                bool write_outputs) {
  if (cfg.iters <= 0) throw std::invalid_argument("iters must be positive");
  if (cfg.methods.empty()) throw std::invalid_argument("no methods configured");
  const ProblemView pv = make_problem(cfg);
  const ResolvedGains rg = resolve_gains_impl(cfg, pv);
  const bool unchecked = cfg.gains.validation == "unchecked";
  const ObjectiveSpec baseline_obj{kind_from(cfg.objective), rg.tuner.mu};
  const bool ngd_in_range = rg.ngd_gamma > 0.0 && rg.ngd_gamma < 2.0;

  ExperimentResult result;
  result.gains = rg;

  struct Live {
    Method method;
    TunerState state;
    bool alive = true;
    long diverged_at = -1;
    double v0 = kNaN;
    std::vector<TraceRow> rows;
  };
  std::vector<Live> live;
  for (Method m : cfg.methods) {
    Live l{m, TunerState::initial(m, pv.theta0)};
    live.push_back(std::move(l));
  }

  for (long k = 0; k < cfg.iters; ++k) {
    const ObjectiveSample smp = pv.sample(k);
    const double L_bar = pv.smoothness(k);
    const double optimal = smp.optimal_value
                               ? *smp.optimal_value
                               : (smp.theta_star ? smp.loss(*smp.theta_star)
                                                 : kNaN);
    for (Live& l : live) {
      if (!l.alive) continue;
      TraceRow row;
      row.k = k;
      row.loss = smp.loss(l.state.theta);
      row.loss_gap = row.loss - optimal;
      row.normalized_loss_gap = row.loss_gap / L_bar;
      row.V = kNaN;
      row.delta_V = kNaN;
      row.bound = kNaN;
      row.envelope = kNaN;

      const bool tuner = l.method == Method::Hot || l.method == Method::HotHb;
      const bool track_ngd =
          l.method == Method::GdNormalized && ngd_in_range && smp.theta_star;
      if (tuner && smp.theta_star) {
        row.V = lyapunov_value(l.state, *smp.theta_star, rg.tuner.gamma);
        if (std::isnan(l.v0)) l.v0 = row.V;
      } else if (track_ngd) {
        row.V = l.state.theta.distance_sq(*smp.theta_star) / rg.ngd_gamma;
        if (std::isnan(l.v0)) l.v0 = row.V;
      }

      try {
        TunerState next = step_method(l.method, l.state, smp, rg, baseline_obj,
                                      unchecked);
        if (tuner && smp.theta_star && rg.certified) {
          const LyapunovRecord rec = check_tuner_step(
              smp, l.state, next, rg.tuner, *smp.theta_star, l.v0);
          row.delta_V = rec.delta_V;
          row.bound = rec.rhs_bound;
          row.envelope = rec.envelope;
          row.satisfied = rec.satisfied ? 1 : 0;
        } else if (tuner && smp.theta_star) {
          row.delta_V =
              lyapunov_value(next, *smp.theta_star, rg.tuner.gamma) - row.V;
        } else if (track_ngd) {
          const double v_next =
              next.theta.distance_sq(*smp.theta_star) / rg.ngd_gamma;
          row.delta_V = v_next - row.V;
          row.bound = -(2.0 - rg.ngd_gamma) * 2.0 * row.loss /
                      smp.normalization;
          row.envelope = l.v0;
          row.satisfied =
              row.delta_V <= row.bound + 1e-9 * std::max(1.0, std::abs(row.V))
                  ? 1
                  : 0;
        }
        l.state = std::move(next);
      } catch (const DivergedError& e) {
        l.alive = false;
        l.diverged_at = e.iteration;
      } catch (const NonFiniteGradient& e) {
        l.alive = false;
        l.diverged_at = e.iteration;
      }
      l.rows.push_back(row);
    }
  }

  for (Live& l : live) {
    MethodTrace t;
    t.method = l.method;
    t.diverged_at = l.diverged_at;
    t.rows = std::move(l.rows);
    t.final_theta = l.state.theta;
    result.traces.push_back(std::move(t));
  }

  if (!write_outputs) return result;

  const std::filesystem::path outdir = resolve_output_dir(cfg);
  std::filesystem::create_directories(outdir);
  result.outdir = outdir;

  std::vector<PlotSeries> series;
  const std::string column =
      cfg.experiment == "shp" ? "normalized_loss_gap" : "loss";
  for (const MethodTrace& t : result.traces) {
    const std::string tag(method_tag(t.method));
    write_trace_csv(outdir / (cfg.name + "_" + tag + ".csv"), t.rows,
                    t.diverged_at);
    PlotSeries s;
    s.label = std::string(method_display_name(t.method));
    s.color = plot_palette()[static_cast<std::size_t>(t.method) %
                             plot_palette().size()];
    s.diverged_at = t.diverged_at;
    for (const TraceRow& r : t.rows)
      s.points.emplace_back(static_cast<double>(r.k),
                            cfg.experiment == "shp" ? r.normalized_loss_gap
                                                    : r.loss);
    series.push_back(std::move(s));
  }

  if (cfg.experiment == "shp" && pv.hard) {
    const double L0 = pv.smoothness(0);
    const ObjectiveSample s0 = pv.sample(0);
    const double d2 = pv.theta0.distance_sq(*s0.theta_star);
    PlotSeries gd_rate{"gradient method rate bound", "#999999", {}, -1, true};
    PlotSeries acc_rate{"accelerated rate bound", "#bbbbbb", {}, -1, true};
    PlotSeries lower{"first-order lower bound", "#555555", {}, -1, true};
    for (long k = 0; k < cfg.iters; ++k) {
      gd_rate.points.emplace_back(
          static_cast<double>(k),
          2.0 * L0 * d2 / (static_cast<double>(k) + 4.0) / L0);
      if (k >= 2)
        acc_rate.points.emplace_back(
            static_cast<double>(k),
            2.0 * L0 * d2 /
                ((static_cast<double>(k) - 1.0) * (static_cast<double>(k) - 1.0)) /
                L0);
    }
    const long kmax = std::min<long>(cfg.iters - 1, (pv.hard->n - 1) / 2);
    for (long k = 1; k <= kmax; ++k)
      lower.points.emplace_back(
          static_cast<double>(k),
          first_order_lower_bound(L0, lower_bound_dist_sq(*pv.hard, k), k) /
              L0);
    series.push_back(std::move(gd_rate));
    series.push_back(std::move(acc_rate));
    series.push_back(std::move(lower));
  }

  PlotOptions opt;
  opt.title = cfg.name;
  opt.y_label = column;
  write_svg_plot(outdir / (cfg.name + ".svg"), series, opt);

  if (cfg.experiment == "deblur" && pv.blur) {
    const DeblurProblem& p = *pv.blur;
    write_pgm(p.true_image, outdir / (cfg.name + "_original.pgm"));
    write_pgm(image_from_spectrum(param_as_spectrum(
                  p.observation(0), p.true_image.rows, p.true_image.cols)),
              outdir / (cfg.name + "_blurred.pgm"));
    for (const MethodTrace& t : result.traces) {
      write_pgm(image_from_spectrum(param_as_spectrum(
                    t.final_theta, p.true_image.rows, p.true_image.cols)),
                outdir / (cfg.name + "_recon_" +
                          std::string(method_tag(t.method)) + ".pgm"));
    }
  }

  return result;
}

}  // namespace hot
