// AVX2+FMA kernel variants. Built for generic x86-64 and only dispatched to
// after a cpuid check, hence the per-function target attributes.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstddef>

#define HOT_AVX2 __attribute__((target("avx2,fma")))

namespace hot::kernels::avx2 {

HOT_AVX2 void axpy(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] = __builtin_fma(a, x[i], y[i]);
}

HOT_AVX2 void scale(double a, const double* x, double* dst, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(dst + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) dst[i] = a * x[i];
}

HOT_AVX2 void combine(double a, const double* x, double b, const double* y,
                      double* dst, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  const __m256d vb = _mm256_set1_pd(b);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d t = _mm256_mul_pd(vb, _mm256_loadu_pd(y + i));
    t = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), t);
    _mm256_storeu_pd(dst + i, t);
  }
  for (; i < n; ++i) dst[i] = __builtin_fma(a, x[i], b * y[i]);
}

HOT_AVX2 void sub(const double* x, const double* y, double* dst,
                  std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(
        dst + i, _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) dst[i] = x[i] - y[i];
}

HOT_AVX2 static double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

HOT_AVX2 double dot(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

HOT_AVX2 double norm_sq(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i] * x[i];
  return s;
}

// Two complex entries per vector, interleaved (re, im) layout.
HOT_AVX2 double complex_residual_grad(const double* phi, const double* theta,
                                      const double* y, double* g,
                                      std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d ph = _mm256_loadu_pd(phi + 2 * i);
    const __m256d th = _mm256_loadu_pd(theta + 2 * i);
    const __m256d ph_re = _mm256_movedup_pd(ph);          // re re
    const __m256d ph_im = _mm256_permute_pd(ph, 0b1111);  // im im
    const __m256d th_sw = _mm256_permute_pd(th, 0b0101);  // swap re/im
    // phi*theta: even lanes re*re - im*im, odd lanes re*im + im*re
    const __m256d prod =
        _mm256_fmaddsub_pd(ph_re, th, _mm256_mul_pd(ph_im, th_sw));
    const __m256d r = _mm256_sub_pd(prod, _mm256_loadu_pd(y + 2 * i));
    acc = _mm256_fmadd_pd(r, r, acc);
    // conj(phi)*r: even lanes re*rr + im*ri, odd lanes re*ri - im*rr
    const __m256d r_sw = _mm256_permute_pd(r, 0b0101);
    const __m256d gv =
        _mm256_fmsubadd_pd(ph_re, r, _mm256_mul_pd(ph_im, r_sw));
    _mm256_storeu_pd(g + 2 * i, gv);
  }
  double loss2 = hsum(acc);
  for (; i < n; ++i) {
    const double pr = phi[2 * i], pi = phi[2 * i + 1];
    const double tr = theta[2 * i], ti = theta[2 * i + 1];
    const double rr = __builtin_fma(pr, tr, -(pi * ti)) - y[2 * i];
    const double ri = __builtin_fma(pr, ti, pi * tr) - y[2 * i + 1];
    g[2 * i] = __builtin_fma(pr, rr, pi * ri);
    g[2 * i + 1] = __builtin_fma(pr, ri, -(pi * rr));
    loss2 += rr * rr + ri * ri;
  }
  return loss2;
}

}  // namespace hot::kernels::avx2

#endif  // x86-64
