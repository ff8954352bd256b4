// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 betashrink contributors
#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace betashrink::prior {

/// Mixture prior for a wavelet coefficient: a point mass at zero with weight
/// alpha plus a beta density with shapes (a, b) rescaled to [-m, m].
///
/// alpha = 0 is accepted as the degenerate "no point mass" configuration
/// (needed by level-dependent elicitation, where the coarsest detail level
/// gets alpha = 0); alpha = 1 is rejected since the continuous part would be
/// unreachable. a = b is accepted but flagged as symmetric, see
/// is_symmetric_shapes().
struct BetaMixturePrior {
  double alpha = 0.9;
  double a = 2.0;
  double b = 3.0;
  double m = 1.0;
};

/// Throws std::invalid_argument when hyperparameters are out of range.
void validate(const BetaMixturePrior& prior);

/// True for the degenerate symmetric configuration a == b.
bool is_symmetric_shapes(const BetaMixturePrior& prior);

/// Density of the continuous beta part on [-m, m]; zero outside the support.
/// For a < 1 (resp. b < 1) the density diverges at -m (resp. +m); evaluation
/// exactly at a divergent endpoint returns a large finite clamp.
double beta_density(double theta, const BetaMixturePrior& prior);

/// log of beta_density for theta strictly inside (-m, m).
double log_beta_density(double theta, const BetaMixturePrior& prior);

/// Mean of the mixture: m (1 - alpha) (a - b) / (a + b).
double prior_mean(const BetaMixturePrior& prior);

/// Variance of the mixture:
/// (1 - alpha) m^2 / (a + b)^2 * [ 4ab / (a + b + 1) + alpha (a - b)^2 ].
double prior_variance(const BetaMixturePrior& prior);

/// Pearson skewness (third standardized moment) of the continuous beta part:
/// 2 (b - a) sqrt(a + b + 1) / ((a + b + 2) sqrt(ab)).
double beta_skewness(const BetaMixturePrior& prior);

/// Mean of the continuous beta part alone: m (a - b) / (a + b).
double beta_part_mean(const BetaMixturePrior& prior);

/// Variance of the continuous beta part alone: 4 m^2 ab / ((a+b)^2 (a+b+1)).
double beta_part_variance(const BetaMixturePrior& prior);

/// i.i.d. draws: 0 with probability alpha, otherwise m (2B - 1) with
/// B ~ Beta(a, b). The caller owns the generator.
std::vector<double> sample(const BetaMixturePrior& prior, std::size_t count,
                           std::mt19937_64& rng);

/// Convenience overload constructing a generator from the seed.
std::vector<double> sample(const BetaMixturePrior& prior, std::size_t count,
                           std::uint64_t seed);

}  // namespace betashrink::prior
