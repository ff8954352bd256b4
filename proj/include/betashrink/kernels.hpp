// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 betashrink contributors
#pragma once

#include <cstddef>

namespace betashrink::kernels {

/// Numeric inner-loop primitives. Every entry point has a scalar reference
/// implementation and, on x86-64 machines with AVX2+FMA, a vectorized variant
/// selected once at startup. The two are interchangeable up to floating-point
/// reassociation (different accumulation order); equivalence is enforced by
/// tests at 1e-12 relative tolerance.

enum class Backend { scalar, avx2 };

/// Backend currently in use.
Backend active_backend();

/// Force a backend (tests). Throws std::invalid_argument if unsupported here.
void set_backend(Backend backend);

/// Return to the best backend available on this machine.
void reset_backend();

/// sum_i a[i] * b[i]
double dot(const double* a, const double* b, std::size_t n);

/// sum_i (a[i] - b[i])^2
double sum_sq_diff(const double* a, const double* b, std::size_t n);

/// sum_i x[i]^2
double sum_squares(const double* x, std::size_t n);

/// out[i] = sign(x[i]) * max(|x[i]| - lambda, 0). In-place allowed (out == x).
void soft_threshold(const double* x, double* out, std::size_t n, double lambda);

/// out[i] += s1 * f1[i] + s2 * f2[i]
void axpy2(double* out, const double* f1, double s1, const double* f2, double s2,
           std::size_t n);

}  // namespace betashrink::kernels
