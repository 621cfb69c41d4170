#include "hotuner/deblur.hpp"

#include <cmath>
#include <stdexcept>

#include "hotuner/kernels.hpp"

namespace hot {

PsfKernel psf_gauss(int size, double sigma) {
  if (size < 1 || size % 2 == 0)
    throw std::invalid_argument("psf size must be odd and >= 1");
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  PsfKernel p;
  p.size = size;
  p.sigma = sigma;
  p.values.resize(static_cast<std::size_t>(size) * size);
  const int c = (size - 1) / 2;
  double sum = 0.0;
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      const double di = i - c, dj = j - c;
      const double v = std::exp(-(di * di + dj * dj) / (2.0 * sigma * sigma));
      p.values[static_cast<std::size_t>(i) * size + j] = v;
      sum += v;
    }
  }
  for (auto& v : p.values) v /= sum;
  return p;
}

double BlurSpectrum::opnorm_sq() const {
  double m = 0.0;
  for (std::size_t i = 0; i < pixels(); ++i) {
    const double re = coeff[2 * i], im = coeff[2 * i + 1];
    m = std::max(m, re * re + im * im);
  }
  return m;
}

BlurSpectrum blur_operator(const PsfKernel& psf, int rows, int cols) {
  if (psf.size > rows || psf.size > cols)
    throw std::invalid_argument("psf larger than image");
  ComplexGrid g(rows, cols);
  const int c = (psf.size - 1) / 2;
  for (int i = 0; i < psf.size; ++i) {
    for (int j = 0; j < psf.size; ++j) {
      const int r = ((i - c) % rows + rows) % rows;
      const int q = ((j - c) % cols + cols) % cols;
      g.re(r, q) = psf.at(i, j);
    }
  }
  fft2d_forward(g);
  BlurSpectrum s;
  s.rows = rows;
  s.cols = cols;
  s.delta = 1.0;
  s.coeff = std::move(g.data);
  return s;
}

BlurSpectrum scaled_spectrum(const BlurSpectrum& base, double delta) {
  BlurSpectrum s;
  s.rows = base.rows;
  s.cols = base.cols;
  s.delta = delta;
  s.coeff.resize(base.coeff.size());
  kernels::scale(delta, base.coeff.data(), s.coeff.data(), base.coeff.size());
  return s;
}

Schedule delta_ramp_schedule() { return Schedule::ramp(1.0, 200.0, 500, 700); }

double delta_schedule(std::string_view kind, long k) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  if (kind == "ramp") return delta_ramp_schedule()(k);
  if (kind == "constant") return 1.0;
  throw std::invalid_argument("unknown delta schedule kind");
}

double sigma_schedule_sinusoidal(long k) {
  return 7.0 - 4.1 * std::sin(0.01 * static_cast<double>(k));
}

ObjectiveSample deblur_sample(const BlurSpectrum& phi,
                              const std::vector<double>& y, long k) {
  if (y.size() != phi.coeff.size())
    throw DimensionMismatch("spectrum/observation size mismatch");
  const std::size_t n = phi.pixels();
  ObjectiveSample s;
  s.k = k;
  s.normalization = 1.0 + phi.opnorm_sq();
  s.optimal_value = 0.0;
  // Shared coefficient storage keeps the sample cheap to copy.
  auto coeff = std::make_shared<std::vector<double>>(phi.coeff);
  auto obs = std::make_shared<std::vector<double>>(y);
  s.loss = [coeff, obs, n](const ParamVector& theta) {
    if (theta.dim() != 2 * n) throw DimensionMismatch("deblur theta dim");
    std::vector<double> g(2 * n);
    return 0.5 * kernels::complex_residual_grad(coeff->data(), theta.data(),
                                                obs->data(), g.data(), n);
  };
  s.gradient = [coeff, obs, n](const ParamVector& theta) {
    if (theta.dim() != 2 * n) throw DimensionMismatch("deblur theta dim");
    ParamVector g(2 * n);
    kernels::complex_residual_grad(coeff->data(), theta.data(), obs->data(),
                                   g.data(), n);
    return g;
  };
  return s;
}

ParamVector spectrum_as_param(const ComplexGrid& g) {
  return ParamVector(g.data);
}

ComplexGrid param_as_spectrum(const ParamVector& v, int rows, int cols) {
  if (v.dim() != static_cast<std::size_t>(2) * rows * cols)
    throw DimensionMismatch("param/spectrum size mismatch");
  ComplexGrid g(rows, cols);
  g.data = v.entries();
  return g;
}

DeblurProblem::DeblurProblem(Image img, int psf_size_, Schedule sigma_,
                             Schedule delta_)
    : true_image(std::move(img)),
      psf_size(psf_size_),
      sigma(sigma_),
      delta(delta_) {
  theta_star_ = spectrum_as_param(spectrum_of(true_image));
  base_ = blur_operator(psf_gauss(psf_size, sigma(0)), true_image.rows,
                        true_image.cols);
  sigma_constant_ = sigma.kind == Schedule::Kind::Constant;
}

BlurSpectrum DeblurProblem::spectrum(long k) const {
  if (sigma_constant_) return scaled_spectrum(base_, delta(k));
  const BlurSpectrum raw = blur_operator(psf_gauss(psf_size, sigma(k)),
                                         true_image.rows, true_image.cols);
  return scaled_spectrum(raw, delta(k));
}

ParamVector DeblurProblem::observation(long k) const {
  const BlurSpectrum phi = spectrum(k);
  const std::size_t n = phi.pixels();
  ParamVector y(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double pr = phi.coeff[2 * i], pi = phi.coeff[2 * i + 1];
    const double tr = theta_star_[2 * i], ti = theta_star_[2 * i + 1];
    y[2 * i] = pr * tr - pi * ti;
    y[2 * i + 1] = pr * ti + pi * tr;
  }
  return y;
}

ObjectiveSample DeblurProblem::sample(long k) const {
  const BlurSpectrum phi = spectrum(k);
  ObjectiveSample s = deblur_sample(phi, observation(k).entries(), k);
  s.theta_star = theta_star_;
  return s;
}

double DeblurProblem::max_normalization(long horizon) const {
  double m = 1.0;
  if (sigma_constant_) {
    const double base_norm = base_.opnorm_sq();
    for (long k = 0; k < horizon; ++k) {
      const double d = delta(k);
      m = std::max(m, 1.0 + d * d * base_norm);
    }
  } else {
    for (long k = 0; k < horizon; ++k)
      m = std::max(m, 1.0 + spectrum(k).opnorm_sq());
  }
  return m;
}

}  // namespace hot
