// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 betashrink contributors
#include "betashrink/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace betashrink::quadrature {

namespace {

Rule make_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const int mid = (n + 1) / 2;
  for (int i = 0; i < mid; ++i) {
    // Tricomi-style initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

Rule make_hermite(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite: order must be >= 1");
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const double pim4 = 0.7511255444649425;  // pi^{-1/4}
  const int mid = (n + 1) / 2;
  double x = 0.0;
  for (int i = 0; i < mid; ++i) {
    // Standard initial guesses for the roots in descending order.
    if (i == 0) {
      x = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      x -= 1.14 * std::pow(n, 0.426) / x;
    } else if (i == 2) {
      x = 1.86 * x - 0.86 * r.nodes[n - 1];
    } else if (i == 3) {
      x = 1.91 * x - 0.91 * r.nodes[n - 2];
    } else {
      x = 2.0 * x - r.nodes[n - i + 1];
    }
    double pp = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
      // Orthonormal Hermite recurrence keeps magnitudes tame.
      double p1 = pim4, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = x * std::sqrt(2.0 / (j + 1.0)) * p2 - std::sqrt(double(j) / (j + 1.0)) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double dx = p1 / pp;
      x -= dx;
      if (std::fabs(dx) < 1e-14) break;
    }
    r.nodes[n - 1 - i] = x;
    r.nodes[i] = -x;
    const double w = 2.0 / (pp * pp);
    r.weights[n - 1 - i] = w;
    r.weights[i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

const Rule& cached(std::map<int, Rule>& cache, std::mutex& mu, int order, Rule (*make)(int)) {
  std::lock_guard lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, make(order)).first;
  return it->second;
}

}  // namespace

const Rule& gauss_legendre(int order) {
  static std::map<int, Rule> cache;
  static std::mutex mu;
  return cached(cache, mu, order, make_legendre);
}

const Rule& gauss_hermite(int order) {
  static std::map<int, Rule> cache;
  static std::mutex mu;
  return cached(cache, mu, order, make_hermite);
}

}  // namespace betashrink::quadrature
