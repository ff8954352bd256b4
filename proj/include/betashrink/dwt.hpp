// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 betashrink contributors
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace betashrink::dwt {

/// An orthonormal two-channel filter bank. The high-pass taps are the
/// quadrature mirror of the low-pass: g[i] = (-1)^i h[L-1-i].
struct WaveletFilter {
  std::string name;
  std::vector<double> low_pass;
  std::vector<double> high_pass;

  /// Daubechies extremal-phase filter with 8 vanishing moments (16 taps).
  static const WaveletFilter& daub8();
  /// Daubechies extremal-phase filter with 10 vanishing moments (20 taps).
  static const WaveletFilter& daub10();
  /// Lookup by name ("daub8" | "daub10"); throws std::invalid_argument otherwise.
  static const WaveletFilter& by_name(std::string_view name);

  /// Build from low-pass taps; derives the mirror high-pass and checks the
  /// normalization invariants (sum = sqrt(2), sum of squares = 1, both 1e-12).
  static WaveletFilter from_low_pass(std::string name, std::vector<double> low_pass);
};

/// Multiresolution coefficient stack produced by forward(). Level j holds 2^j
/// detail coefficients for j in [j0, J-1]; coarse holds the 2^{j0} scaling
/// coefficients. Sizes always add up to the original signal length n = 2^J.
struct CoefficientPyramid {
  std::vector<double> coarse;
  std::vector<std::vector<double>> details;  // details[i] is level j0 + i
  int j0 = 0;
  std::size_t n = 0;

  int num_levels() const { return static_cast<int>(details.size()); }
  int finest_level() const { return j0 + num_levels() - 1; }
  bool has_level(int j) const { return j >= j0 && j < j0 + num_levels(); }
  std::vector<double>& level(int j);
  const std::vector<double>& level(int j) const;

  /// coarse followed by detail levels in ascending j.
  std::vector<double> flatten() const;
  /// Total number of detail coefficients.
  std::size_t detail_count() const;
};

/// Throws std::invalid_argument if the level sizes are inconsistent.
void validate_shape(const CoefficientPyramid& pyramid);

/// Periodic (circular) orthogonal DWT down to level j0. Requires a dyadic
/// length with log2(n) > j0 >= 0.
CoefficientPyramid forward(std::span<const double> signal, const WaveletFilter& filter,
                           int j0 = 0);

/// Exact inverse of forward() for the same filter.
std::vector<double> inverse(const CoefficientPyramid& pyramid, const WaveletFilter& filter);

/// True if n is a power of two (n >= 1).
bool is_dyadic(std::size_t n);

/// floor(log2 n) for n >= 1.
int log2_floor(std::size_t n);

}  // namespace betashrink::dwt
