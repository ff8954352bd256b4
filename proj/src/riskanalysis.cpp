// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 betashrink contributors
#include "betashrink/riskanalysis.hpp"

#include <cmath>
#include <numbers>

#include "betashrink/csvio.hpp"
#include "betashrink/quadrature.hpp"
#include "shrinkage_nodes.hpp"

namespace betashrink::riskanalysis {

RiskPoint classical_risk(const shrinkage::ScalarRule& rule, double theta, double sigma,
                         int hermite_order) {
  const auto& gh = quadrature::gauss_hermite(hermite_order);
  const double scale = std::numbers::sqrt2 * sigma;
  double m1 = 0.0, m2 = 0.0, sq = 0.0;
  for (int i = 0; i < hermite_order; ++i) {
    const double d = theta + scale * gh.nodes[i];
    const double v = rule(d);
    const double err = v - theta;
    m1 += gh.weights[i] * v;
    m2 += gh.weights[i] * v * v;
    sq += gh.weights[i] * err * err;
  }
  const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
  m1 *= inv_sqrt_pi;
  m2 *= inv_sqrt_pi;
  sq *= inv_sqrt_pi;
  RiskPoint out;
  out.bias = m1 - theta;
  out.variance = m2 - m1 * m1;
  out.risk = sq;
  return out;
}

RiskCurve risk_curve(const shrinkage::ScalarRule& rule, std::span<const double> theta_grid,
                     double sigma, int hermite_order) {
  RiskCurve curve;
  curve.theta_grid.assign(theta_grid.begin(), theta_grid.end());
  curve.bias2.reserve(theta_grid.size());
  curve.variance.reserve(theta_grid.size());
  curve.risk.reserve(theta_grid.size());
  for (const double theta : theta_grid) {
    const RiskPoint pt = classical_risk(rule, theta, sigma, hermite_order);
    curve.bias2.push_back(pt.bias * pt.bias);
    curve.variance.push_back(pt.variance);
    curve.risk.push_back(pt.risk);
  }
  return curve;
}

std::string to_csv(const RiskCurve& curve) {
  std::string out = "theta,bias2,variance,risk\n";
  for (std::size_t i = 0; i < curve.theta_grid.size(); ++i) {
    out += csvio::format_double(curve.theta_grid[i]);
    out += ',';
    out += csvio::format_double(curve.bias2[i]);
    out += ',';
    out += csvio::format_double(curve.variance[i]);
    out += ',';
    out += csvio::format_double(curve.risk[i]);
    out += '\n';
  }
  return out;
}

double bayes_risk(const shrinkage::BetaShrinkageRule& rule, int hermite_order,
                  int legendre_order) {
  shrinkage::validate(rule);
  const auto scalar = shrinkage::as_scalar_rule(rule);
  const auto nodes = shrinkage::detail::build_prior_nodes(rule.prior, legendre_order);
  double integral = 0.0;
  for (std::size_t i = 0; i < nodes.theta.size(); ++i) {
    const double r = classical_risk(scalar, nodes.theta[i], rule.sigma, hermite_order).risk;
    integral += nodes.weight[i] * std::exp(nodes.logg[i]) * r;
  }
  const double risk_at_zero = classical_risk(scalar, 0.0, rule.sigma, hermite_order).risk;
  return rule.prior.alpha * risk_at_zero + (1.0 - rule.prior.alpha) * integral;
}

}  // namespace betashrink::riskanalysis
