#include "hotuner/config.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace hot {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw std::invalid_argument("unknown key '" + it.key() + "' in " + where);
}

}  // namespace

json schedule_to_json(const Schedule& s) {
  json j;
  switch (s.kind) {
    case Schedule::Kind::Constant:
      j["kind"] = "constant";
      j["value"] = s.value;
      break;
    case Schedule::Kind::Step:
      j["kind"] = "step";
      j["pre"] = s.pre;
      j["post"] = s.post;
      j["switch_at"] = s.switch_at;
      break;
    case Schedule::Kind::Ramp:
      j["kind"] = "ramp";
      j["from"] = s.from;
      j["to"] = s.to;
      j["k_start"] = s.k_start;
      j["k_end"] = s.k_end;
      break;
    case Schedule::Kind::Sinusoid:
      j["kind"] = "sinusoid";
      j["offset"] = s.offset;
      j["amplitude"] = s.amplitude;
      j["omega"] = s.omega;
      j["phase"] = s.phase;
      break;
  }
  return j;
}

Schedule schedule_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant") {
    reject_unknown_keys(j, {"kind", "value"}, "schedule");
    return Schedule::constant(j.at("value").get<double>());
  }
  if (kind == "step") {
    reject_unknown_keys(j, {"kind", "pre", "post", "switch_at"}, "schedule");
    return Schedule::step(j.at("pre").get<double>(), j.at("post").get<double>(),
                          j.at("switch_at").get<long>());
  }
  if (kind == "ramp") {
    reject_unknown_keys(j, {"kind", "from", "to", "k_start", "k_end"},
                        "schedule");
    return Schedule::ramp(j.at("from").get<double>(), j.at("to").get<double>(),
                          j.at("k_start").get<long>(),
                          j.at("k_end").get<long>());
  }
  if (kind == "sinusoid") {
    reject_unknown_keys(j, {"kind", "offset", "amplitude", "omega", "phase"},
                        "schedule");
    return Schedule::sinusoid(
        j.at("offset").get<double>(), j.at("amplitude").get<double>(),
        j.at("omega").get<double>(),
        j.contains("phase") ? j.at("phase").get<double>() : 0.0);
  }
  throw std::invalid_argument("unknown schedule kind '" + kind + "'");
}

json config_to_json(const ExperimentConfig& c) {
  json j;
  j["experiment"] = c.experiment;
  j["name"] = c.name;
  json methods = json::array();
  for (Method m : c.methods) methods.push_back(std::string(method_tag(m)));
  j["methods"] = methods;
  json g;
  g["mode"] = c.gains.mode;
  g["gamma"] = c.gains.gamma;
  g["beta"] = c.gains.beta;
  g["mu"] = c.gains.mu;
  g["epsilon"] = c.gains.epsilon;
  g["validation"] = c.gains.validation;
  j["gains"] = g;
  j["iters"] = c.iters;
  j["dimension"] = c.dimension;
  j["image_size"] = c.image_size;
  j["psf_size"] = c.psf_size;
  j["seed"] = c.seed;
  j["max_magnitude"] = c.max_magnitude;
  j["objective"] = c.objective;
  j["theta0"] = c.theta0;
  j["image"] = c.image;
  j["output_dir"] = c.output_dir;
  json sch = json::object();
  for (const auto& [name, s] : c.schedules) sch[name] = schedule_to_json(s);
  j["schedules"] = sch;
  j["suites"] = c.suites;
  return j;
}

ExperimentConfig config_from_json(const json& j) {
  reject_unknown_keys(
      j,
      {"experiment", "name", "methods", "gains", "iters", "dimension",
       "image_size", "psf_size", "seed", "max_magnitude", "objective",
       "theta0", "image", "output_dir", "schedules", "suites"},
      "config");
  ExperimentConfig c;
  c.experiment = j.at("experiment").get<std::string>();
  if (c.experiment != "shp" && c.experiment != "deblur" &&
      c.experiment != "synth" && c.experiment != "verify")
    throw std::invalid_argument("unknown experiment '" + c.experiment + "'");
  c.name = j.value("name", c.experiment);
  if (j.contains("methods")) {
    for (const auto& m : j.at("methods")) {
      auto tag = method_from_tag(m.get<std::string>());
      if (!tag)
        throw std::invalid_argument("unknown method '" + m.get<std::string>() + "'");
      c.methods.push_back(*tag);
    }
  }
  if (j.contains("gains")) {
    const json& g = j.at("gains");
    reject_unknown_keys(g, {"mode", "gamma", "beta", "mu", "epsilon", "validation"},
                        "gains");
    c.gains.mode = g.value("mode", "manual");
    c.gains.gamma = g.value("gamma", 0.0);
    c.gains.beta = g.value("beta", 0.0);
    c.gains.mu = g.value("mu", 0.0);
    c.gains.epsilon = g.value("epsilon", 1e-3);
    c.gains.validation = g.value("validation", "strict");
    if (c.gains.validation != "strict" && c.gains.validation != "unchecked")
      throw std::invalid_argument("gains.validation must be strict|unchecked");
  }
  c.iters = j.value("iters", 0L);
  c.dimension = j.value("dimension", 401);
  c.image_size = j.value("image_size", 64);
  c.psf_size = j.value("psf_size", 11);
  c.seed = j.value("seed", std::uint64_t{1});
  c.max_magnitude = j.value("max_magnitude", 1e3);
  c.objective = j.value("objective", "raw");
  if (c.objective != "raw" && c.objective != "normalized" &&
      c.objective != "regularized")
    throw std::invalid_argument("objective must be raw|normalized|regularized");
  c.theta0 = j.value("theta0", c.experiment == "deblur" ? "y0" : "zero");
  c.image = j.value("image", "checkerboard");
  c.output_dir = j.value("output_dir", "out");
  if (j.contains("schedules"))
    for (auto it = j.at("schedules").begin(); it != j.at("schedules").end(); ++it)
      c.schedules[it.key()] = schedule_from_json(it.value());
  if (j.contains("suites"))
    for (const auto& s : j.at("suites")) c.suites.push_back(s.get<std::string>());
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  json j;
  in >> j;
  return config_from_json(j);
}

void save_config(const ExperimentConfig& c, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write config " + path.string());
  out << config_to_json(c).dump(2) << "\n";
}

}  // namespace hot
