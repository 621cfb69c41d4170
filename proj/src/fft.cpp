#include "hotuner/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hot {

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

void fft_strided(double* data, std::size_t n, std::size_t stride,
                 bool inverse) {
  if (!is_power_of_two(n))
    throw std::invalid_argument("fft length must be a power of two");
  const std::size_t cs = 2 * stride;  // doubles between consecutive entries

  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) {
      std::swap(data[i * cs], data[j * cs]);
      std::swap(data[i * cs + 1], data[j * cs + 1]);
    }
  }

  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    const double wr = std::cos(ang), wi = std::sin(ang);
    for (std::size_t i = 0; i < n; i += len) {
      double cr = 1.0, ci = 0.0;
      for (std::size_t j = 0; j < len / 2; ++j) {
        double* u = data + (i + j) * cs;
        double* v = data + (i + j + len / 2) * cs;
        const double tr = v[0] * cr - v[1] * ci;
        const double ti = v[0] * ci + v[1] * cr;
        v[0] = u[0] - tr;
        v[1] = u[1] - ti;
        u[0] += tr;
        u[1] += ti;
        const double ncr = cr * wr - ci * wi;
        ci = cr * wi + ci * wr;
        cr = ncr;
      }
    }
  }

  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      data[i * cs] *= inv;
      data[i * cs + 1] *= inv;
    }
  }
}

namespace {
void fft2d(ComplexGrid& g, bool inverse) {
  if (!is_power_of_two(static_cast<std::size_t>(g.rows)) ||
      !is_power_of_two(static_cast<std::size_t>(g.cols)))
    throw std::invalid_argument("grid dims must be powers of two");
  for (int r = 0; r < g.rows; ++r)
    fft_strided(g.data.data() + static_cast<std::size_t>(2) * r * g.cols,
                static_cast<std::size_t>(g.cols), 1, inverse);
  for (int c = 0; c < g.cols; ++c)
    fft_strided(g.data.data() + static_cast<std::size_t>(2) * c,
                static_cast<std::size_t>(g.rows),
                static_cast<std::size_t>(g.cols), inverse);
}
}  // namespace

void fft2d_forward(ComplexGrid& g) { fft2d(g, false); }
void fft2d_inverse(ComplexGrid& g) { fft2d(g, true); }

}  // namespace hot
