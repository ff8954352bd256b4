// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 betashrink contributors
#include "betashrink/shrinkage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "betashrink/kernels.hpp"
#include "betashrink/quadrature.hpp"
#include "shrinkage_nodes.hpp"

namespace betashrink::shrinkage {

namespace detail {

namespace {

double log_beta_function(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Gaussian log factor of the posterior integrand, up to constants.
inline double gauss_log(double theta, double d, double sigma) {
  const double u = (theta - d) / sigma;
  return -0.5 * u * u;
}

// Splits a theta-interval on which gauss_log is monotone into panels whose
// per-panel drop is at most kPanelDrop, discarding anything more than
// kWindowDrop below the global maximum at theta* = clamp(d, -m, m). The
// discarded region contributes at most exp(-kWindowDrop) of the prior mass.
constexpr double kPanelDrop = 25.0;
constexpr double kWindowDrop = 300.0;

void panels_for_piece(double lo, double hi, double d, double sigma, double theta_star,
                      std::vector<std::pair<double, double>>& out) {
  if (!(hi > lo)) return;
  const double emax = gauss_log(theta_star, d, sigma);
  // Orient from the endpoint nearest the peak.
  const bool from_lo = gauss_log(lo, d, sigma) >= gauss_log(hi, d, sigma);
  const double near = from_lo ? lo : hi;
  const double far = from_lo ? hi : lo;
  const double drop_near = emax - gauss_log(near, d, sigma);
  const double drop_far = emax - gauss_log(far, d, sigma);
  if (drop_near >= kWindowDrop) return;  // entire piece negligible
  const double base = theta_star - d;
  const double side = far > near ? 1.0 : -1.0;
  std::vector<double> cuts{near};
  const double cap = std::min(drop_far, kWindowDrop);
  for (double level = std::floor(drop_near / kPanelDrop) * kPanelDrop + kPanelDrop;
       level < cap; level += kPanelDrop) {
    const double r = std::sqrt(base * base + 2.0 * sigma * sigma * level);
    const double x = d + side * r;
    if ((side > 0 && x > cuts.back() && x < far) || (side < 0 && x < cuts.back() && x > far))
      cuts.push_back(x);
  }
  double terminal = far;
  if (drop_far > kWindowDrop) {
    const double r = std::sqrt(base * base + 2.0 * sigma * sigma * kWindowDrop);
    terminal = d + side * r;
  }
  cuts.push_back(terminal);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double a = cuts[i], b = cuts[i + 1];
    if (a > b) std::swap(a, b);
    if (b > a) out.emplace_back(a, b);
  }
}

// Panels over [lo, hi], split at d when interior so each piece is monotone.
std::vector<std::pair<double, double>> gaussian_panels(double lo, double hi, double d,
                                                       double sigma, double theta_star) {
  std::vector<std::pair<double, double>> panels;
  if (d > lo && d < hi) {
    panels_for_piece(lo, d, d, sigma, theta_star, panels);
    panels_for_piece(d, hi, d, sigma, theta_star, panels);
  } else {
    panels_for_piece(lo, hi, d, sigma, theta_star, panels);
  }
  return panels;
}

// Appends plain Gauss-Legendre nodes in theta over [lo, hi].
// Weight carries the half-width; logg carries the log beta density.
void append_regular_panel(const prior::BetaMixturePrior& p, double lo, double hi, int order,
                          NodeSet& ns) {
  const auto& gl = quadrature::gauss_legendre(order);
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  for (int i = 0; i < order; ++i) {
    const double theta = mid + half * gl.nodes[i];
    ns.theta.push_back(theta);
    ns.logg.push_back(prior::log_beta_density(theta, p));
    ns.weight.push_back(gl.weights[i] * half);
  }
}

// Appends nodes for a theta-panel inside a divergent-endpoint half, using the
// substitution that integrates the endpoint singularity exactly:
//   t in [0, 1/2], theta = -m + 2mt, t = (1/2) s^{1/a}:
//     int t^{a-1} (1-t)^{b-1} F dt = (2^-a / a) int (1-t(s))^{b-1} F(theta(s)) ds
// (mirrored for b < 1 at the +m endpoint).
void append_singular_panel(const prior::BetaMixturePrior& p, double tlo, double thi,
                           bool left_end, int order, NodeSet& ns) {
  const double shape = left_end ? p.a : p.b;
  const double other = left_end ? p.b : p.a;
  const double log_const = -shape * std::log(2.0) - std::log(shape) -
                           log_beta_function(p.a, p.b);
  // map t (distance fraction from the singular endpoint) to s
  auto s_of_t = [&](double t) { return std::pow(2.0 * t, shape); };
  const double slo = s_of_t(tlo);
  const double shi = s_of_t(thi);
  const auto& gl = quadrature::gauss_legendre(order);
  const double mid = 0.5 * (slo + shi);
  const double half = 0.5 * (shi - slo);
  for (int i = 0; i < order; ++i) {
    const double s = mid + half * gl.nodes[i];
    const double t = 0.5 * std::pow(s, 1.0 / shape);
    const double theta = left_end ? (-p.m + 2.0 * p.m * t) : (p.m - 2.0 * p.m * t);
    ns.theta.push_back(theta);
    ns.logg.push_back(log_const + (other - 1.0) * std::log1p(-t));
    ns.weight.push_back(gl.weights[i] * half);
  }
}

// Builds nodes over one half of the support. The half is
// [-m, 0] (left = true) or [0, m] (left = false); use_sub selects the
// singularity-absorbing parameterization.
void build_half(const prior::BetaMixturePrior& p, bool left, bool use_sub, double d,
                double sigma, double theta_star, int order, NodeSet& ns) {
  const double lo = left ? -p.m : 0.0;
  const double hi = left ? 0.0 : p.m;
  const auto panels = sigma > 0.0
                          ? gaussian_panels(lo, hi, d, sigma, theta_star)
                          : std::vector<std::pair<double, double>>{{lo, hi}};
  for (const auto& [a, b] : panels) {
    if (!use_sub) {
      append_regular_panel(p, a, b, order, ns);
    } else {
      // convert theta bounds to t = distance fraction from the singular end
      double ta, tb;
      if (left) {
        ta = (a + p.m) / (2.0 * p.m);
        tb = (b + p.m) / (2.0 * p.m);
      } else {
        ta = (p.m - b) / (2.0 * p.m);
        tb = (p.m - a) / (2.0 * p.m);
      }
      append_singular_panel(p, ta, tb, left, order, ns);
    }
  }
}

}  // namespace

NodeSet build_prior_nodes(const prior::BetaMixturePrior& p, int order) {
  NodeSet ns;
  build_half(p, true, p.a < 1.0, 0.0, -1.0, 0.0, order, ns);
  build_half(p, false, p.b < 1.0, 0.0, -1.0, 0.0, order, ns);
  return ns;
}

NodeSet build_posterior_nodes(const prior::BetaMixturePrior& p, double d, double sigma,
                              int order) {
  const double theta_star = std::clamp(d, -p.m, p.m);
  NodeSet ns;
  build_half(p, true, p.a < 1.0, d, sigma, theta_star, order, ns);
  build_half(p, false, p.b < 1.0, d, sigma, theta_star, order, ns);
  return ns;
}

}  // namespace detail

void validate(const BetaShrinkageRule& rule) {
  prior::validate(rule.prior);
  if (!(rule.sigma > 0.0)) throw std::invalid_argument("shrinkage: sigma must be positive");
  if (rule.quadrature_order < 16)
    throw std::invalid_argument("shrinkage: quadrature_order must be >= 16");
}

double shrink(double d, const BetaShrinkageRule& rule) {
  validate(rule);
  const auto& p = rule.prior;
  const double sigma = rule.sigma;
  const auto ns = detail::build_posterior_nodes(p, d, sigma, rule.quadrature_order);
  const std::size_t n = ns.theta.size();

  // log of each continuous term; the point-mass term is alpha * exp(e0).
  const double e0 = -0.5 * (d / sigma) * (d / sigma);
  thread_local std::vector<double> expv, w1;
  expv.resize(n);
  w1.resize(n);
  double cmax = e0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = (ns.theta[i] - d) / sigma;
    expv[i] = ns.logg[i] - 0.5 * u * u;
    cmax = std::max(cmax, expv[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    expv[i] = std::exp(expv[i] - cmax);
    w1[i] = ns.weight[i] * ns.theta[i];
  }
  const double i0 = kernels::dot(ns.weight.data(), expv.data(), n);
  const double i1 = kernels::dot(w1.data(), expv.data(), n);
  const double point_mass = p.alpha * std::exp(e0 - cmax);
  const double den = point_mass + (1.0 - p.alpha) * i0;
  const double num = (1.0 - p.alpha) * i1;
  const double delta = num / den;
  if (!std::isfinite(delta) || !(den > 0.0)) {
    std::ostringstream msg;
    msg << "shrink: non-finite rule value at d=" << d << " (alpha=" << p.alpha << ", a=" << p.a
        << ", b=" << p.b << ", m=" << p.m << ", sigma=" << sigma << ", num=" << num
        << ", den=" << den << ")";
    throw numerical_error(msg.str());
  }
  return delta;
}

double shrink_oracle(double d, const BetaShrinkageRule& rule, std::size_t grid_size) {
  validate(rule);
  if (grid_size < 10000)
    throw std::invalid_argument("shrink_oracle: grid_size must be >= 10^4");
  const auto& p = rule.prior;
  const double sigma = rule.sigma;
  const double h = 2.0 * p.m / static_cast<double>(grid_size - 1);

  // Direct posterior-mean form: integrate theta * g(theta) * phi((d-theta)/sigma)
  // against the trapezoid rule; shared constants cancel in the ratio.
  const double e0 = -0.5 * (d / sigma) * (d / sigma);
  double cmax = e0;
  std::vector<double> theta(grid_size), logterm(grid_size), wt(grid_size);
  for (std::size_t i = 0; i < grid_size; ++i) {
    double x = -p.m + h * static_cast<double>(i);
    double w = (i == 0 || i == grid_size - 1) ? 0.5 * h : h;
    // a divergent endpoint is never sampled exactly; nudge inward instead
    if (i == 0 && p.a < 1.0) x += 0.25 * h;
    if (i == grid_size - 1 && p.b < 1.0) x -= 0.25 * h;
    const double g = prior::beta_density(x, p);
    const double u = (x - d) / sigma;
    theta[i] = x;
    wt[i] = w;
    logterm[i] = (g > 0.0 ? std::log(g) : -std::numeric_limits<double>::infinity()) -
                 0.5 * u * u;
    if (logterm[i] > cmax) cmax = logterm[i];
  }
  double i0 = 0.0, i1 = 0.0;
  for (std::size_t i = 0; i < grid_size; ++i) {
    const double t = wt[i] * std::exp(logterm[i] - cmax);
    i0 += t;
    i1 += t * theta[i];
  }
  const double den = p.alpha * std::exp(e0 - cmax) + (1.0 - p.alpha) * i0;
  const double num = (1.0 - p.alpha) * i1;
  const double delta = num / den;
  if (!std::isfinite(delta) || !(den > 0.0))
    throw numerical_error("shrink_oracle: non-finite value at d=" + std::to_string(d));
  return delta;
}

ScalarRule as_scalar_rule(const BetaShrinkageRule& rule) {
  validate(rule);
  return [rule](double d) { return shrink(d, rule); };
}

dwt::CoefficientPyramid shrink_pyramid(const dwt::CoefficientPyramid& pyramid,
                                       const std::map<int, ScalarRule>& per_level_rules) {
  dwt::validate_shape(pyramid);
  dwt::CoefficientPyramid out = pyramid;
  for (int j = pyramid.j0; j <= pyramid.finest_level(); ++j) {
    const auto it = per_level_rules.find(j);
    if (it == per_level_rules.end() || !it->second)
      throw std::invalid_argument("shrink_pyramid: no rule configured for level " +
                                  std::to_string(j));
    auto& lvl = out.level(j);
    for (double& c : lvl) c = it->second(c);
  }
  return out;
}

}  // namespace betashrink::shrinkage
