#pragma once
// Frequency-domain time-varying deblurring: Gaussian PSF, its padded DFT as
// the element-wise blur operator, scalar delta corruption, and the complex
// least-squares objective over the spectrum. Complex parameters live in the
// interleaved real embedding used by ParamVector.

#include <string_view>

#include "hotuner/image.hpp"
#include "hotuner/objective.hpp"
#include "hotuner/schedule.hpp"

namespace hot {

struct PsfKernel {
  int size = 1;
  double sigma = 1.0;
  std::vector<double> values;  // size x size, row-major, sums to 1

  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * size + j]; }
};

// Gaussian kernel centered at ((size-1)/2, (size-1)/2), normalized to sum 1.
PsfKernel psf_gauss(int size, double sigma);

struct BlurSpectrum {
  int rows = 0, cols = 0;
  double delta = 1.0;
  std::vector<double> coeff;  // interleaved complex, row-major

  std::size_t pixels() const { return static_cast<std::size_t>(rows) * cols; }
  // Squared spectral norm of the diagonal operator: max |coeff|^2.
  double opnorm_sq() const;
};

// Pad the PSF into rows x cols, circularly shift its center to (0,0), take
// the 2-D DFT.
BlurSpectrum blur_operator(const PsfKernel& psf, int rows, int cols);

BlurSpectrum scaled_spectrum(const BlurSpectrum& base, double delta);

// "ramp": 1 until k=500, (199/200)k - 496.5 until k=700, then 200.
// "constant": 1 for all k.
double delta_schedule(std::string_view kind, long k);
Schedule delta_ramp_schedule();

// sigma_k = 7 - 4.1 sin(0.01 k)
double sigma_schedule_sinusoidal(long k);

// Objective sample for 1/2 sum |phi_i theta_i - y_i|^2 over the spectrum;
// y is interleaved complex of the same shape. N = 1 + max |phi_i|^2.
ObjectiveSample deblur_sample(const BlurSpectrum& phi,
                              const std::vector<double>& y, long k);

// Binds a ground-truth image to PSF/delta schedules. theta* is the DFT of
// the true image; y_k = phi_k (.) theta* is the observed blurred spectrum.
struct DeblurProblem {
  Image true_image;
  int psf_size = 11;
  Schedule sigma = Schedule::constant(7.0);
  Schedule delta = Schedule::constant(1.0);

  DeblurProblem() = default;
  DeblurProblem(Image img, int psf_size, Schedule sigma, Schedule delta);

  const ParamVector& theta_star() const { return theta_star_; }
  BlurSpectrum spectrum(long k) const;
  // Observed blurred spectrum y_k = phi_k (.) theta*, interleaved complex.
  ParamVector observation(long k) const;
  ObjectiveSample sample(long k) const;
  // Largest N_k over 0 <= k < horizon (the "all regressors known" case).
  double max_normalization(long horizon) const;

 private:
  ParamVector theta_star_;
  BlurSpectrum base_;       // spectrum of the k=0 PSF
  bool sigma_constant_ = true;
};

// Interleaved-complex view helpers shared with the runner.
ParamVector spectrum_as_param(const ComplexGrid& g);
ComplexGrid param_as_spectrum(const ParamVector& v, int rows, int cols);

}  // namespace hot
