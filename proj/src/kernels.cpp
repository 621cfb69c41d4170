#include "hotuner/kernels.hpp"

#include <atomic>

namespace hot::kernels {

namespace scalar {

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale(double a, const double* x, double* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a * x[i];
}

void combine(double a, const double* x, double b, const double* y,
             double* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a * x[i] + b * y[i];
}

void sub(const double* x, const double* y, double* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = x[i] - y[i];
}

double dot(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

double norm_sq(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
  return s;
}

double complex_residual_grad(const double* phi, const double* theta,
                             const double* y, double* g, std::size_t n) {
  double loss2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double pr = phi[2 * i], pi = phi[2 * i + 1];
    const double tr = theta[2 * i], ti = theta[2 * i + 1];
    const double rr = pr * tr - pi * ti - y[2 * i];
    const double ri = pr * ti + pi * tr - y[2 * i + 1];
    g[2 * i] = pr * rr + pi * ri;
    g[2 * i + 1] = pr * ri - pi * rr;
    loss2 += rr * rr + ri * ri;
  }
  return loss2;
}

}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define HOT_HAVE_AVX2_KERNELS 1
namespace avx2 {
void axpy(double a, const double* x, double* y, std::size_t n);
void scale(double a, const double* x, double* dst, std::size_t n);
void combine(double a, const double* x, double b, const double* y,
             double* dst, std::size_t n);
void sub(const double* x, const double* y, double* dst, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
double norm_sq(const double* x, std::size_t n);
double complex_residual_grad(const double* phi, const double* theta,
                             const double* y, double* g, std::size_t n);
}  // namespace avx2
#endif

namespace {

struct Ops {
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*scale)(double, const double*, double*, std::size_t);
  void (*combine)(double, const double*, double, const double*, double*,
                  std::size_t);
  void (*sub)(const double*, const double*, double*, std::size_t);
  double (*dot)(const double*, const double*, std::size_t);
  double (*norm_sq)(const double*, std::size_t);
  double (*complex_residual_grad)(const double*, const double*, const double*,
                                  double*, std::size_t);
  const char* name;
};

constexpr Ops kScalarOps = {scalar::axpy,    scalar::scale,
                            scalar::combine, scalar::sub,
                            scalar::dot,     scalar::norm_sq,
                            scalar::complex_residual_grad, "scalar"};

#ifdef HOT_HAVE_AVX2_KERNELS
constexpr Ops kAvx2Ops = {avx2::axpy,    avx2::scale,
                          avx2::combine, avx2::sub,
                          avx2::dot,     avx2::norm_sq,
                          avx2::complex_residual_grad, "avx2"};

bool cpu_has_avx2_fma() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

const Ops* detect_ops() {
#ifdef HOT_HAVE_AVX2_KERNELS
  if (cpu_has_avx2_fma()) return &kAvx2Ops;
#endif
  return &kScalarOps;
}

std::atomic<const Ops*> g_ops{nullptr};

const Ops* ops() {
  const Ops* p = g_ops.load(std::memory_order_acquire);
  if (!p) {
    p = detect_ops();
    g_ops.store(p, std::memory_order_release);
  }
  return p;
}

}  // namespace

const char* backend_name() { return ops()->name; }

void set_backend(Backend b) {
  switch (b) {
    case Backend::Auto:
      g_ops.store(detect_ops(), std::memory_order_release);
      break;
    case Backend::Scalar:
      g_ops.store(&kScalarOps, std::memory_order_release);
      break;
    case Backend::Simd:
      g_ops.store(detect_ops(), std::memory_order_release);
      break;
  }
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  ops()->axpy(a, x, y, n);
}
void scale(double a, const double* x, double* dst, std::size_t n) {
  ops()->scale(a, x, dst, n);
}
void combine(double a, const double* x, double b, const double* y, double* dst,
             std::size_t n) {
  ops()->combine(a, x, b, y, dst, n);
}
void sub(const double* x, const double* y, double* dst, std::size_t n) {
  ops()->sub(x, y, dst, n);
}
double dot(const double* x, const double* y, std::size_t n) {
  return ops()->dot(x, y, n);
}
double norm_sq(const double* x, std::size_t n) { return ops()->norm_sq(x, n); }
double complex_residual_grad(const double* phi, const double* theta,
                             const double* y, double* g, std::size_t n) {
  return ops()->complex_residual_grad(phi, theta, y, g, n);
}

}  // namespace hot::kernels
