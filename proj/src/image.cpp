#include "hotuner/image.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

#include "hotuner/streams.hpp"

namespace hot {

Image read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());

  auto next_token = [&in, &path]() {
    std::string tok;
    for (;;) {
      if (!(in >> tok)) throw std::runtime_error("truncated PGM header: " + path.string());
      if (tok[0] == '#') {
        std::string rest;
        std::getline(in, rest);
        continue;
      }
      return tok;
    }
  };

  if (next_token() != "P5")
    throw std::runtime_error("unsupported image format (want binary P5)");
  const int cols = std::stoi(next_token());
  const int rows = std::stoi(next_token());
  const int maxval = std::stoi(next_token());
  if (cols <= 0 || rows <= 0) throw std::runtime_error("bad PGM dimensions");
  if (maxval != 255) throw std::runtime_error("only 8-bit PGM supported");
  in.get();  // single whitespace after maxval

  std::vector<unsigned char> raw(static_cast<std::size_t>(rows) * cols);
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (in.gcount() != static_cast<std::streamsize>(raw.size()))
    throw std::runtime_error("truncated PGM payload: " + path.string());

  Image img(rows, cols);
  for (std::size_t i = 0; i < raw.size(); ++i) img.px[i] = raw[i];
  return img;
}

void write_pgm(const Image& img, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "P5\n" << img.cols << " " << img.rows << "\n255\n";
  std::vector<unsigned char> raw(img.px.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const double v = std::clamp(std::round(img.px[i]), 0.0, 255.0);
    raw[i] = static_cast<unsigned char>(v);
  }
  out.write(reinterpret_cast<const char*>(raw.data()),
            static_cast<std::streamsize>(raw.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

Image checkerboard_image(int rows, int cols, int tile) {
  Image img(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      img.at(r, c) = ((r / tile + c / tile) % 2 == 0) ? 220.0 : 40.0;
  return img;
}

Image gradient_image(int rows, int cols) {
  Image img(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      img.at(r, c) = std::round(255.0 * (r + c) / double(rows + cols - 2));
  return img;
}

Image noise_image(int rows, int cols, std::uint64_t seed) {
  Image img(rows, cols);
  Rng rng(substream_seed(seed, 7));
  for (auto& p : img.px) p = std::floor(rng.uniform01() * 256.0);
  return img;
}

ComplexGrid spectrum_of(const Image& img) {
  ComplexGrid g(img.rows, img.cols);
  for (int r = 0; r < img.rows; ++r)
    for (int c = 0; c < img.cols; ++c) g.re(r, c) = img.at(r, c);
  fft2d_forward(g);
  return g;
}

Image image_from_spectrum(ComplexGrid spectrum) {
  fft2d_inverse(spectrum);
  Image img(spectrum.rows, spectrum.cols);
  for (int r = 0; r < spectrum.rows; ++r)
    for (int c = 0; c < spectrum.cols; ++c)
      img.at(r, c) = std::clamp(spectrum.re(r, c), 0.0, 255.0);
  return img;
}

}  // namespace hot
