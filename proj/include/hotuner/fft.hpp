#pragma once
// Radix-2 complex FFT over interleaved (re, im) doubles. Unnormalized
// forward transform; inverse divides by the length. Dimensions must be
// powers of two.

#include <cstddef>
#include <vector>

namespace hot {

struct ComplexGrid {
  int rows = 0, cols = 0;
  std::vector<double> data;  // interleaved re,im; row-major; 2*rows*cols doubles

  ComplexGrid() = default;
  ComplexGrid(int r, int c)
      : rows(r), cols(c), data(static_cast<std::size_t>(2) * r * c, 0.0) {}
  double& re(int r, int c) { return data[2 * (static_cast<std::size_t>(r) * cols + c)]; }
  double& im(int r, int c) { return data[2 * (static_cast<std::size_t>(r) * cols + c) + 1]; }
  double re(int r, int c) const { return data[2 * (static_cast<std::size_t>(r) * cols + c)]; }
  double im(int r, int c) const { return data[2 * (static_cast<std::size_t>(r) * cols + c) + 1]; }
};

// One-dimensional in-place FFT over n complex entries spaced `stride`
// complex elements apart.
void fft_strided(double* data, std::size_t n, std::size_t stride, bool inverse);

void fft2d_forward(ComplexGrid& g);
void fft2d_inverse(ComplexGrid& g);

bool is_power_of_two(std::size_t n);

}  // namespace hot
