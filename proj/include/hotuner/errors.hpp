#pragma once

#include <stdexcept>
#include <string>

namespace hot {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised by the step functions when an iterate norm exceeds the guard value,
// so unstable runs stop before producing inf/NaN.
struct DivergedError : std::runtime_error {
  explicit DivergedError(long k)
      : std::runtime_error("iterate diverged at k=" + std::to_string(k)),
        iteration(k) {}
  long iteration;
};

struct NonFiniteGradient : std::runtime_error {
  explicit NonFiniteGradient(long k)
      : std::runtime_error("non-finite gradient at k=" + std::to_string(k)),
        iteration(k) {}
  long iteration;
};

// Norm threshold for DivergedError.
inline constexpr double kDivergenceNorm = 1e150;

}  // namespace hot
