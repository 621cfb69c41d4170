#pragma once
// Experiment configuration: a strict JSON schema (unknown keys rejected)
// that round-trips losslessly through its file form.

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hotuner/optim.hpp"
#include "hotuner/schedule.hpp"

namespace hot {

struct GainsConfig {
  // shp: choice-a | choice-b; deblur: choice-1..choice-4; any: manual | lemma
  std::string mode = "manual";
  double gamma = 0.0, beta = 0.0, mu = 0.0;  // manual mode
  double epsilon = 1e-3;                     // choice-b / lemma target gap
  std::string validation = "strict";         // strict | unchecked

  bool operator==(const GainsConfig&) const = default;
};

struct ExperimentConfig {
  std::string experiment;  // shp | deblur | synth | verify
  std::string name;        // output prefix and plot title
  std::vector<Method> methods;
  GainsConfig gains;
  long iters = 0;
  int dimension = 401;    // shp / synth
  int image_size = 64;    // deblur (square, power of two)
  int psf_size = 11;      // deblur
  std::uint64_t seed = 1;
  double max_magnitude = 1e3;  // synth adversarial streams
  std::string objective = "raw";   // baseline methods: raw | normalized | regularized
  std::string theta0 = "zero";     // zero | y0 (deblur default y0)
  std::string image = "checkerboard";  // checkerboard | gradient | noise | <path>
  std::string output_dir = "out";
  std::map<std::string, Schedule> schedules;
  std::vector<std::string> suites;  // verify experiment

  bool operator==(const ExperimentConfig&) const = default;
};

nlohmann::json schedule_to_json(const Schedule& s);
Schedule schedule_from_json(const nlohmann::json& j);

nlohmann::json config_to_json(const ExperimentConfig& c);
ExperimentConfig config_from_json(const nlohmann::json& j);

ExperimentConfig load_config(const std::filesystem::path& path);
void save_config(const ExperimentConfig& c, const std::filesystem::path& path);

}  // namespace hot
