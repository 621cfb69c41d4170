#pragma once
// Regressor/output stream generators for the streaming regression model
// y_k = theta*^T phi_k (noise free by construction).

#include <cstdint>
#include <functional>

#include "hotuner/objective.hpp"
#include "hotuner/param_vector.hpp"
#include "hotuner/schedule.hpp"

namespace hot {

// xorshift64* generator: x ^= x>>12; x ^= x<<25; x ^= x>>27;
// return x * 2685821657736338717. Fixed constants keep streams reproducible
// across platforms and languages.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  // uniform in [0,1) with 53 random mantissa bits
  double uniform01();
  // uniform in [-1,1)
  double symmetric();

 private:
  std::uint64_t s_;
};

// Derives an independent, randomly-accessible substream seed.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

struct RegressionStream {
  ParamVector theta_star;
  std::function<ParamVector(long)> regressor;

  double output(long k) const;  // theta*^T phi_k, exact
  ObjectiveSample sample(long k) const;
};

RegressionStream synth_stream(ParamVector theta_star,
                              std::function<ParamVector(long)> phi);

// Seeded random direction with per-step magnitude from the schedule.
RegressionStream synth_stream(ParamVector theta_star, std::size_t dim,
                              const Schedule& magnitude, std::uint64_t seed);

// phi_k entries drawn uniformly in [-max_magnitude, max_magnitude], freshly
// seeded per k so regressor(k) is pure and randomly accessible; theta* drawn
// uniformly in [-1,1]^dim.
RegressionStream adversarial_stream(std::uint64_t seed, std::size_t dim,
                                    double max_magnitude);

}  // namespace hot
