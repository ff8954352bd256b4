// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 betashrink contributors
#pragma once

#include <utility>

#include "betashrink/dwt.hpp"

namespace betashrink::elicitation {

/// Policy knobs for the data-driven hyperparameter choices. The skewness
/// thresholds and shape magnitudes are conventions, not estimates; they are
/// surfaced here so callers can override them.
struct ElicitationConfig {
  double gamma = 2.0;  // exponent in the level-dependent point-mass weight
  int j0 = 0;          // primary resolution level
  double skew_threshold = 0.1;
  std::pair<double, double> right_skew_shapes{2.0, 3.0};  // a < b
  std::pair<double, double> left_skew_shapes{3.0, 2.0};   // a > b
  std::pair<double, double> symmetric_shapes{2.0, 2.01};
};

void validate(const ElicitationConfig& config);

/// Robust noise-sd estimate: median(|d_{J-1,k}|) / 0.6745 over the finest
/// detail level. Returns 0 for an all-zero level (degenerate but legal).
double estimate_sigma(const dwt::CoefficientPyramid& pyramid);

/// Level-dependent point-mass weight alpha(j) = 1 - (j - j0 + 1)^{-gamma}.
/// Note alpha(j0) = 0: the coarsest detail level carries no point mass.
double alpha_for_level(int j, const ElicitationConfig& config);

/// Level-dependent support half-width m(j) = max_k |d_{jk}|.
double m_for_level(const dwt::CoefficientPyramid& pyramid, int j);

/// Sample Pearson skewness (third standardized moment) of a data vector.
double sample_skewness(std::span<const double> values);

/// Skewness-guided beta shapes from the pooled detail coefficients: positive
/// skew beyond the threshold maps to a < b, negative to a > b, otherwise the
/// near-symmetric default. Requires at least 8 detail coefficients.
std::pair<double, double> suggest_shapes(const dwt::CoefficientPyramid& pyramid,
                                         const ElicitationConfig& config = {});

}  // namespace betashrink::elicitation
