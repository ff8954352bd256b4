// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 betashrink contributors
#pragma once

#include <span>
#include <vector>

namespace betashrink::baselines {

enum class ThresholdPolicy { universal, sure, fdr };

struct ThresholdRule {
  ThresholdPolicy policy = ThresholdPolicy::universal;
  double sigma = 1.0;
  double q = 0.05;  // FDR level, used only by the fdr policy
};

void validate(const ThresholdRule& rule);

/// Soft thresholding: sign(d) max(|d| - lambda, 0).
double soft(double d, double lambda);

/// Soft-threshold a whole vector.
std::vector<double> soft(std::span<const double> d, double lambda);

/// Universal threshold sigma sqrt(2 ln n) for n >= 2 coefficients.
double universal_threshold(std::size_t n, double sigma);

/// Threshold minimizing Stein's unbiased risk estimate
///   SURE(lambda) = n sigma^2 - 2 sigma^2 #{|d_i| <= lambda} + sum min(d_i^2, lambda^2)
/// over the candidate set {0} U {|d_i|}; ties resolve to the smallest lambda.
double sure_threshold(std::span<const double> coeffs, double sigma);

/// SURE objective at a given lambda (exposed for the brute-force cross-check).
double sure_objective(std::span<const double> coeffs, double sigma, double lambda);

/// Benjamini-Hochberg step-up threshold: two-sided p-values
/// p_i = 2(1 - Phi(|d_i| / sigma)) sorted ascending, k* the largest k with
/// p_(k) <= (k/n) q, lambda = sigma Phi^{-1}(1 - p_(k*)/2). Falls back to the
/// universal threshold when no p-value passes.
double fdr_threshold(std::span<const double> coeffs, double sigma, double q);

}  // namespace betashrink::baselines
