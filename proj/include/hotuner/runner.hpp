#pragma once
// Experiment runner: resolves a config into a problem, gain choices, and
// per-method trajectories; emits CSV traces, an SVG overlay plot, and (for
// deblur) reconstructed images.

#include <filesystem>
#include <optional>
#include <vector>

#include "hotuner/config.hpp"
#include "hotuner/gains.hpp"
#include "hotuner/lyapunov.hpp"
#include "hotuner/trace.hpp"

namespace hot {

struct MethodTrace {
  Method method = Method::Hot;
  long diverged_at = -1;
  std::vector<TraceRow> rows;
  ParamVector final_theta;
};

struct ResolvedGains {
  Gains tuner;              // gamma, beta, mu for the two tuner variants
  double alpha_bar = 0.0;   // baseline step size
  double beta_bar = 0.0;    // constant momentum for nesterov_const/heavy_ball
  double ngd_gamma = 0.0;   // normalized gradient descent rate
  bool certified = false;   // tuner gains satisfy the stability bounds
  std::optional<DerivedGains> derived;  // choice-b / lemma pipelines
};

struct ExperimentResult {
  std::vector<MethodTrace> traces;
  ResolvedGains gains;
  std::filesystem::path outdir;

  const MethodTrace& trace(Method m) const;
};

// Resolves the gain mode against the problem the config describes (exposed
// separately so tests can pin the derived values).
ResolvedGains resolve_gains(const ExperimentConfig& cfg);

// Runs every configured method over the configured stream. With
// write_outputs the traces land in output_dir (prefixed by the
// HOTUNER_OUTPUT_ROOT environment variable when set).
ExperimentResult run_experiment(const ExperimentConfig& cfg,
                                bool write_outputs = true);

std::filesystem::path resolve_output_dir(const ExperimentConfig& cfg);

}  // namespace hot
