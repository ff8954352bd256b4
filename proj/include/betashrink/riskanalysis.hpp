// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 betashrink contributors
#pragma once

#include <span>
#include <vector>

#include "betashrink/shrinkage.hpp"

namespace betashrink::riskanalysis {

struct RiskPoint {
  double bias = 0.0;
  double variance = 0.0;
  double risk = 0.0;  // E[(delta(d) - theta)^2], equals bias^2 + variance
};

/// Frequentist risk of a scalar rule at a fixed coefficient value theta under
/// d ~ N(theta, sigma^2). The expectation is a Gauss-Hermite quadrature
/// (default 61 nodes).
RiskPoint classical_risk(const shrinkage::ScalarRule& rule, double theta, double sigma,
                         int hermite_order = 61);

struct RiskCurve {
  std::vector<double> theta_grid;
  std::vector<double> bias2;
  std::vector<double> variance;
  std::vector<double> risk;
};

/// classical_risk over a grid of theta values.
RiskCurve risk_curve(const shrinkage::ScalarRule& rule, std::span<const double> theta_grid,
                     double sigma, int hermite_order = 61);

/// Serialize a curve as CSV with header theta,bias2,variance,risk.
std::string to_csv(const RiskCurve& curve);

/// Bayes risk of the beta rule under its own prior:
///   r = alpha R(0) + (1 - alpha) int R(theta) g(theta) dtheta,
/// the inner integral by Gauss-Legendre with the same endpoint handling as
/// the shrinkage quadrature.
double bayes_risk(const shrinkage::BetaShrinkageRule& rule, int hermite_order = 61,
                  int legendre_order = 64);

}  // namespace betashrink::riskanalysis
