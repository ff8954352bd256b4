// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 betashrink contributors
#pragma once

#include <vector>

namespace betashrink::quadrature {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree 2*order - 1.
/// Rules are computed once per order and cached; safe for concurrent callers.
const Rule& gauss_legendre(int order);

/// Gauss-Hermite rule (physicists' weight exp(-x^2) on the real line).
/// E[f(X)] for X ~ N(mu, sigma^2) is sum_i w_i f(mu + sqrt(2) sigma x_i) / sqrt(pi).
const Rule& gauss_hermite(int order);

}  // namespace betashrink::quadrature
