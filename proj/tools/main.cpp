// hotuner: streaming-regression optimizer bench.
//   run    --config <file>       execute an experiment config
//   verify --suite <name|all>    run a property suite, print a JSON report
//   plot   --in a.csv b.csv --out plot.svg [--column loss]
// Exit codes: 0 ok, 1 check failure, 2 usage/config error.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hotuner/config.hpp"
#include "hotuner/kernels.hpp"
#include "hotuner/runner.hpp"
#include "hotuner/svg.hpp"
#include "hotuner/verify.hpp"

namespace {

int do_run(const std::string& config_path) {
  const hot::ExperimentConfig cfg = hot::load_config(config_path);
  if (cfg.experiment == "verify") {
    bool all_pass = true;
    const auto& suites =
        cfg.suites.empty() ? hot::verify_suite_names() : cfg.suites;
    for (const std::string& s : suites) {
      const auto results = hot::run_verify_suite(s);
      std::cout << hot::check_results_json(s, results);
      for (const auto& r : results) all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
  }
  const hot::ExperimentResult result = hot::run_experiment(cfg);
  for (const auto& t : result.traces) {
    std::cout << hot::method_tag(t.method) << ": "
              << (t.diverged_at >= 0
                      ? "diverged at k=" + std::to_string(t.diverged_at)
                      : "completed " + std::to_string(t.rows.size()) + " steps")
              << "\n";
  }
  std::cout << "outputs in " << result.outdir.string() << "\n";
  return 0;
}

int do_verify(const std::string& suite) {
  bool all_pass = true;
  std::vector<std::string> suites;
  if (suite == "all")
    suites = hot::verify_suite_names();
  else
    suites.push_back(suite);
  for (const std::string& s : suites) {
    const auto results = hot::run_verify_suite(s);
    std::cout << hot::check_results_json(s, results);
    for (const auto& r : results) all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"higher-order tuner experiment harness"};
  app.require_subcommand(1);

  std::string kernels = "auto";
  app.add_option("--kernels", kernels, "kernel backend: auto|scalar")
      ->check(CLI::IsMember({"auto", "scalar"}));

  std::string config_path;
  CLI::App* run = app.add_subcommand("run", "run an experiment config");
  run->add_option("--config", config_path, "config JSON path")->required();

  std::string suite;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "lyapunov|equivalence|bounds|deblur-oracle|all")
      ->required();

  std::vector<std::string> plot_inputs;
  std::string plot_output;
  std::string plot_column = "loss";
  CLI::App* plot = app.add_subcommand("plot", "plot trace CSVs into an SVG");
  plot->add_option("--in", plot_inputs, "input CSV files")->required()->expected(-1);
  plot->add_option("--out", plot_output, "output SVG path")->required();
  plot->add_option("--column", plot_column,
                   "loss|loss_gap|normalized_loss_gap|V");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  hot::kernels::set_backend(kernels == "scalar"
                                ? hot::kernels::Backend::Scalar
                                : hot::kernels::Backend::Auto);

  try {
    if (*run) return do_run(config_path);
    if (*verify) return do_verify(suite);
    if (*plot) {
      std::vector<std::filesystem::path> ins(plot_inputs.begin(),
                                             plot_inputs.end());
      hot::plot_csv_files(ins, plot_output, plot_column);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
