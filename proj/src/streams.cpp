#include "hotuner/streams.hpp"

#include <stdexcept>

namespace hot {

Rng::Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

std::uint64_t Rng::next() {
  s_ ^= s_ >> 12;
  s_ ^= s_ << 25;
  s_ ^= s_ >> 27;
  return s_ * 2685821657736338717ull;
}

double Rng::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Rng::symmetric() { return 2.0 * uniform01() - 1.0; }

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over seed ^ golden-ratio-striped index
  std::uint64_t z = seed ^ (index * 0x9e3779b97f4a7c15ull) ^ 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double RegressionStream::output(long k) const {
  return theta_star.dot(regressor(k));
}

ObjectiveSample RegressionStream::sample(long k) const {
  ParamVector phi = regressor(k);
  const double y = theta_star.dot(phi);
  ObjectiveSample s;
  s.k = k;
  s.normalization = 1.0 + phi.norm_sq();
  s.theta_star = theta_star;
  s.optimal_value = 0.0;
  s.loss = [phi, y](const ParamVector& theta) {
    const double e = prediction_error(phi, theta, y);
    return 0.5 * e * e;
  };
  s.gradient = [phi, y](const ParamVector& theta) {
    const double e = prediction_error(phi, theta, y);
    return e * phi;
  };
  return s;
}

RegressionStream synth_stream(ParamVector theta_star,
                              std::function<ParamVector(long)> phi) {
  return RegressionStream{std::move(theta_star), std::move(phi)};
}

RegressionStream synth_stream(ParamVector theta_star, std::size_t dim,
                              const Schedule& magnitude, std::uint64_t seed) {
  if (theta_star.dim() != dim) throw DimensionMismatch("theta_star dim");
  Rng rng(substream_seed(seed, 0));
  ParamVector direction(dim);
  for (std::size_t i = 0; i < dim; ++i) direction[i] = rng.symmetric();
  const double scale = std::sqrt(direction.norm_sq());
  if (scale > 0.0) direction *= 1.0 / scale;
  Schedule mag = magnitude;
  return RegressionStream{
      std::move(theta_star),
      [direction, mag](long k) { return mag(k) * direction; }};
}

RegressionStream adversarial_stream(std::uint64_t seed, std::size_t dim,
                                    double max_magnitude) {
  if (!(max_magnitude >= 0.0))
    throw std::domain_error("max_magnitude must be >= 0");
  Rng star_rng(substream_seed(seed, 0));
  ParamVector theta_star(dim);
  for (std::size_t i = 0; i < dim; ++i) theta_star[i] = star_rng.symmetric();

  return RegressionStream{
      std::move(theta_star), [seed, dim, max_magnitude](long k) {
        Rng rng(substream_seed(seed, static_cast<std::uint64_t>(k) + 1));
        ParamVector phi(dim);
        for (std::size_t i = 0; i < dim; ++i)
          phi[i] = max_magnitude * rng.symmetric();
        return phi;
      }};
}

}  // namespace hot
