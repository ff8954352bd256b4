// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 betashrink contributors
#include "betashrink/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace betashrink::kernels {

namespace detail {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double sum_sq_diff_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double sum_squares_scalar(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
  return s;
}

void soft_threshold_scalar(const double* x, double* out, std::size_t n, double lambda) {
  for (std::size_t i = 0; i < n; ++i) {
    const double a = std::fabs(x[i]) - lambda;
    out[i] = a > 0.0 ? std::copysign(a, x[i]) : 0.0;
  }
}

void axpy2_scalar(double* out, const double* f1, double s1, const double* f2, double s2,
                  std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] += s1 * f1[i] + s2 * f2[i];
}

#if defined(BETASHRINK_HAVE_AVX2)
double dot_avx2(const double*, const double*, std::size_t);
double sum_sq_diff_avx2(const double*, const double*, std::size_t);
double sum_squares_avx2(const double*, std::size_t);
void soft_threshold_avx2(const double*, double*, std::size_t, double);
void axpy2_avx2(double*, const double*, double, const double*, double, std::size_t);
#endif

struct Ops {
  double (*dot)(const double*, const double*, std::size_t);
  double (*sum_sq_diff)(const double*, const double*, std::size_t);
  double (*sum_squares)(const double*, std::size_t);
  void (*soft_threshold)(const double*, double*, std::size_t, double);
  void (*axpy2)(double*, const double*, double, const double*, double, std::size_t);
};

constexpr Ops kScalarOps{dot_scalar, sum_sq_diff_scalar, sum_squares_scalar,
                         soft_threshold_scalar, axpy2_scalar};

#if defined(BETASHRINK_HAVE_AVX2)
constexpr Ops kAvx2Ops{dot_avx2, sum_sq_diff_avx2, sum_squares_avx2, soft_threshold_avx2,
                       axpy2_avx2};
#endif

bool avx2_supported() {
#if defined(BETASHRINK_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend g_backend = avx2_supported() ? Backend::avx2 : Backend::scalar;

const Ops& ops() {
#if defined(BETASHRINK_HAVE_AVX2)
  return g_backend == Backend::avx2 ? kAvx2Ops : kScalarOps;
#else
  return kScalarOps;
#endif
}

}  // namespace detail

Backend active_backend() { return detail::g_backend; }

void set_backend(Backend backend) {
  if (backend == Backend::avx2 && !detail::avx2_supported())
    throw std::invalid_argument("kernels: AVX2 backend not supported on this machine");
  detail::g_backend = backend;
}

void reset_backend() {
  detail::g_backend = detail::avx2_supported() ? Backend::avx2 : Backend::scalar;
}

double dot(const double* a, const double* b, std::size_t n) {
  return detail::ops().dot(a, b, n);
}

double sum_sq_diff(const double* a, const double* b, std::size_t n) {
  return detail::ops().sum_sq_diff(a, b, n);
}

double sum_squares(const double* x, std::size_t n) {
  return detail::ops().sum_squares(x, n);
}

void soft_threshold(const double* x, double* out, std::size_t n, double lambda) {
  detail::ops().soft_threshold(x, out, n, lambda);
}

void axpy2(double* out, const double* f1, double s1, const double* f2, double s2,
           std::size_t n) {
  detail::ops().axpy2(out, f1, s1, f2, s2, n);
}

}  // namespace betashrink::kernels
