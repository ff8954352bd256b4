// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 betashrink contributors
#include "betashrink/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "betashrink/kernels.hpp"
#include "betashrink/normal.hpp"

namespace betashrink::baselines {

void validate(const ThresholdRule& rule) {
  if (!(rule.sigma > 0.0)) throw std::invalid_argument("baseline: sigma must be positive");
  if (!(rule.q > 0.0 && rule.q < 1.0))
    throw std::invalid_argument("baseline: FDR level q must lie in (0, 1)");
}

double soft(double d, double lambda) {
  if (lambda < 0.0) throw std::invalid_argument("soft: lambda must be >= 0");
  const double a = std::fabs(d) - lambda;
  return a > 0.0 ? std::copysign(a, d) : 0.0;
}

std::vector<double> soft(std::span<const double> d, double lambda) {
  if (lambda < 0.0) throw std::invalid_argument("soft: lambda must be >= 0");
  std::vector<double> out(d.size());
  kernels::soft_threshold(d.data(), out.data(), d.size(), lambda);
  return out;
}

double universal_threshold(std::size_t n, double sigma) {
  if (n < 2) throw std::invalid_argument("universal_threshold: need n >= 2");
  if (!(sigma > 0.0)) throw std::invalid_argument("universal_threshold: sigma must be positive");
  return sigma * std::sqrt(2.0 * std::log(static_cast<double>(n)));
}

double sure_objective(std::span<const double> coeffs, double sigma, double lambda) {
  const double s2 = sigma * sigma;
  const double l2 = lambda * lambda;
  double value = static_cast<double>(coeffs.size()) * s2;
  for (const double d : coeffs) {
    const double d2 = d * d;
    if (std::fabs(d) <= lambda) value -= 2.0 * s2;
    value += std::min(d2, l2);
  }
  return value;
}

double sure_threshold(std::span<const double> coeffs, double sigma) {
  if (coeffs.empty()) throw std::invalid_argument("sure_threshold: empty coefficient set");
  if (!(sigma > 0.0)) throw std::invalid_argument("sure_threshold: sigma must be positive");
  const std::size_t n = coeffs.size();
  std::vector<double> mags(n);
  for (std::size_t i = 0; i < n; ++i) mags[i] = std::fabs(coeffs[i]);
  std::sort(mags.begin(), mags.end());

  // prefix_sq[k] = sum of the k smallest squared magnitudes
  std::vector<double> prefix_sq(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) prefix_sq[i + 1] = prefix_sq[i] + mags[i] * mags[i];

  const double s2 = sigma * sigma;
  auto sure_at_rank = [&](std::size_t k, double lambda) {
    // k = #{|d_i| <= lambda} when lambda = mags[k-1] (ties share a magnitude)
    return static_cast<double>(n) * s2 - 2.0 * s2 * static_cast<double>(k) + prefix_sq[k] +
           static_cast<double>(n - k) * lambda * lambda;
  };

  double best_lambda = 0.0;
  std::size_t zeros = 0;
  while (zeros < n && mags[zeros] == 0.0) ++zeros;
  double best_value = sure_at_rank(zeros, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (i + 1 < n && mags[i + 1] == mags[i]) continue;  // evaluate each distinct magnitude once
    const double value = sure_at_rank(i + 1, mags[i]);
    if (value < best_value) {  // ties keep the smaller lambda seen first
      best_value = value;
      best_lambda = mags[i];
    }
  }
  return best_lambda;
}

double fdr_threshold(std::span<const double> coeffs, double sigma, double q) {
  if (coeffs.empty()) throw std::invalid_argument("fdr_threshold: empty coefficient set");
  if (!(sigma > 0.0)) throw std::invalid_argument("fdr_threshold: sigma must be positive");
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("fdr_threshold: q must lie in (0, 1)");
  const std::size_t n = coeffs.size();
  std::vector<double> p(n);
  for (std::size_t i = 0; i < n; ++i)
    p[i] = 2.0 * (1.0 - normal::cdf(std::fabs(coeffs[i]) / sigma));
  std::sort(p.begin(), p.end());
  std::size_t k_star = 0;  // 1-based rank of the largest passing p-value
  for (std::size_t k = n; k >= 1; --k) {
    if (p[k - 1] <= (static_cast<double>(k) / static_cast<double>(n)) * q) {
      k_star = k;
      break;
    }
  }
  if (k_star == 0) return n >= 2 ? universal_threshold(n, sigma) : sigma * std::sqrt(2.0);
  // Phi^{-1}(1 - p/2) = -Phi^{-1}(p/2); the right-hand form keeps precision
  // when p is far out in the tail.
  const double half_p = std::max(p[k_star - 1] / 2.0, 1e-300);
  return -sigma * normal::quantile(half_p);
}

}  // namespace betashrink::baselines
