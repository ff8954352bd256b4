// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 betashrink contributors
#include "betashrink/prior.hpp"

#include <cmath>
#include <stdexcept>

namespace betashrink::prior {

namespace {
constexpr double kEndpointClamp = 1e300;

double log_beta_function(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}
}  // namespace

void validate(const BetaMixturePrior& p) {
  if (!(p.alpha >= 0.0 && p.alpha < 1.0))
    throw std::invalid_argument("prior: alpha must lie in [0, 1)");
  if (!(p.a > 0.0) || !(p.b > 0.0))
    throw std::invalid_argument("prior: shapes a and b must be positive");
  if (!(p.m > 0.0)) throw std::invalid_argument("prior: support half-width m must be positive");
}

bool is_symmetric_shapes(const BetaMixturePrior& p) { return p.a == p.b; }

double log_beta_density(double theta, const BetaMixturePrior& p) {
  return (p.a - 1.0) * std::log(theta + p.m) + (p.b - 1.0) * std::log(p.m - theta) -
         (p.a + p.b - 1.0) * std::log(2.0 * p.m) - log_beta_function(p.a, p.b);
}

double beta_density(double theta, const BetaMixturePrior& p) {
  validate(p);
  if (theta < -p.m || theta > p.m) return 0.0;
  if (theta == -p.m) {
    if (p.a < 1.0) return kEndpointClamp;
    if (p.a > 1.0) return 0.0;
    // a == 1: finite endpoint value
    return std::exp((p.b - 1.0) * std::log(2.0 * p.m) - (p.a + p.b - 1.0) * std::log(2.0 * p.m) -
                    log_beta_function(p.a, p.b));
  }
  if (theta == p.m) {
    if (p.b < 1.0) return kEndpointClamp;
    if (p.b > 1.0) return 0.0;
    return std::exp((p.a - 1.0) * std::log(2.0 * p.m) - (p.a + p.b - 1.0) * std::log(2.0 * p.m) -
                    log_beta_function(p.a, p.b));
  }
  return std::exp(log_beta_density(theta, p));
}

double prior_mean(const BetaMixturePrior& p) {
  validate(p);
  return p.m * (1.0 - p.alpha) * (p.a - p.b) / (p.a + p.b);
}

double beta_part_mean(const BetaMixturePrior& p) { return p.m * (p.a - p.b) / (p.a + p.b); }

double beta_part_variance(const BetaMixturePrior& p) {
  const double s = p.a + p.b;
  return 4.0 * p.m * p.m * p.a * p.b / (s * s * (s + 1.0));
}

double prior_variance(const BetaMixturePrior& p) {
  validate(p);
  const double s = p.a + p.b;
  const double diff = p.a - p.b;
  return (1.0 - p.alpha) * p.m * p.m / (s * s) *
         (4.0 * p.a * p.b / (s + 1.0) + p.alpha * diff * diff);
}

double beta_skewness(const BetaMixturePrior& p) {
  validate(p);
  const double s = p.a + p.b;
  return 2.0 * (p.b - p.a) * std::sqrt(s + 1.0) / ((s + 2.0) * std::sqrt(p.a * p.b));
}

std::vector<double> sample(const BetaMixturePrior& p, std::size_t count, std::mt19937_64& rng) {
  validate(p);
  std::vector<double> out;
  out.reserve(count);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::gamma_distribution<double> ga(p.a, 1.0);
  std::gamma_distribution<double> gb(p.b, 1.0);
  for (std::size_t i = 0; i < count; ++i) {
    if (unif(rng) < p.alpha) {
      out.push_back(0.0);
      continue;
    }
    double x = ga(rng);
    double y = gb(rng);
    while (x + y <= 0.0) {  // guards against a double underflow for tiny shapes
      x = ga(rng);
      y = gb(rng);
    }
    out.push_back(p.m * (2.0 * x / (x + y) - 1.0));
  }
  return out;
}

std::vector<double> sample(const BetaMixturePrior& p, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample(p, count, rng);
}

}  // namespace betashrink::prior
