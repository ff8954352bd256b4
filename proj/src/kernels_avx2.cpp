// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 betashrink contributors
//
// AVX2+FMA variants of the inner-loop kernels. Compiled with -mavx2 -mfma and
// reached only after the runtime CPU check in kernels.cpp.
#include <immintrin.h>

#include <cmath>
#include <cstddef>

namespace betashrink::kernels::detail {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

}  // namespace

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4)
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

double sum_sq_diff_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_fmadd_pd(d, d, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double sum_squares_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_loadu_pd(x + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i] * x[i];
  return s;
}

void soft_threshold_avx2(const double* x, double* out, std::size_t n, double lambda) {
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  const __m256d lam = _mm256_set1_pd(lambda);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_loadu_pd(x + i);
    __m256d sign = _mm256_and_pd(v, sign_mask);
    __m256d mag = _mm256_max_pd(_mm256_sub_pd(_mm256_andnot_pd(sign_mask, v), lam), zero);
    _mm256_storeu_pd(out + i, _mm256_or_pd(mag, sign));
  }
  for (; i < n; ++i) {
    const double a = std::fabs(x[i]) - lambda;
    out[i] = a > 0.0 ? std::copysign(a, x[i]) : 0.0;
  }
}

void axpy2_avx2(double* out, const double* f1, double s1, const double* f2, double s2,
                std::size_t n) {
  const __m256d v1 = _mm256_set1_pd(s1);
  const __m256d v2 = _mm256_set1_pd(s2);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_loadu_pd(out + i);
    acc = _mm256_fmadd_pd(v1, _mm256_loadu_pd(f1 + i), acc);
    acc = _mm256_fmadd_pd(v2, _mm256_loadu_pd(f2 + i), acc);
    _mm256_storeu_pd(out + i, acc);
  }
  for (; i < n; ++i) out[i] += s1 * f1[i] + s2 * f2[i];
}

}  // namespace betashrink::kernels::detail
