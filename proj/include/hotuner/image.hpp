#pragma once
// Grayscale images, binary PGM (P5, 8-bit) I/O, and deterministic synthetic
// test images.

#include <cstdint>
#include <filesystem>
#include <vector>

#include "hotuner/fft.hpp"

namespace hot {

struct Image {
  int rows = 0, cols = 0;
  std::vector<double> px;  // row-major, values in [0, 255]

  Image() = default;
  Image(int r, int c) : rows(r), cols(c), px(static_cast<std::size_t>(r) * c, 0.0) {}
  double& at(int r, int c) { return px[static_cast<std::size_t>(r) * cols + c]; }
  double at(int r, int c) const { return px[static_cast<std::size_t>(r) * cols + c]; }
};

Image read_pgm(const std::filesystem::path& path);
// Values are rounded to the nearest integer and clamped to [0, 255].
void write_pgm(const Image& img, const std::filesystem::path& path);

Image checkerboard_image(int rows, int cols, int tile);
Image gradient_image(int rows, int cols);
Image noise_image(int rows, int cols, std::uint64_t seed);

// Forward DFT of the pixel grid (unnormalized).
ComplexGrid spectrum_of(const Image& img);
// Inverse DFT, real part, clamped to [0, 255].
Image image_from_spectrum(ComplexGrid spectrum);

}  // namespace hot
