#pragma once
// Dense double-precision inner loops shared by the optimizers and the
// frequency-domain objective. A scalar reference implementation always
// exists; on x86-64 an AVX2+FMA variant is picked at startup when the CPU
// supports it. The active backend can be forced, which the equivalence
// tests and the CLI use.

#include <cstddef>

namespace hot::kernels {

enum class Backend { Auto, Scalar, Simd };

// Name of the backend currently answering calls: "scalar" or "avx2".
const char* backend_name();

// Force a backend (Auto re-runs CPU detection). Selecting Simd on a CPU
// without AVX2 keeps the scalar kernels. Not meant to be called while
// kernels are running on other threads.
void set_backend(Backend b);

// y[i] += a * x[i]
void axpy(double a, const double* x, double* y, std::size_t n);

// dst[i] = a * x[i]
void scale(double a, const double* x, double* dst, std::size_t n);

// dst[i] = a * x[i] + b * y[i]
void combine(double a, const double* x, double b, const double* y,
             double* dst, std::size_t n);

// dst[i] = x[i] - y[i]
void sub(const double* x, const double* y, double* dst, std::size_t n);

double dot(const double* x, const double* y, std::size_t n);

double norm_sq(const double* x, std::size_t n);

// Interleaved complex arrays (re,im pairs, n complex entries):
//   g[i] = conj(phi[i]) * (phi[i]*theta[i] - y[i])
// Returns sum_i |phi[i]*theta[i] - y[i]|^2.
double complex_residual_grad(const double* phi, const double* theta,
                             const double* y, double* g, std::size_t n);

}  // namespace hot::kernels
