// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 betashrink contributors
//
// Internal: quadrature node construction shared by the shrinkage rule and the
// Bayes-risk integral. Not part of the public API.
#pragma once

#include <vector>

#include "betashrink/prior.hpp"

namespace betashrink::shrinkage::detail {

/// Nodes for integrals of the form  int_{-m}^{m} f(theta) g(theta) q(theta) dtheta
/// approximated by  sum_i weight[i] * exp(logg[i] + log q(theta[i])) * f(theta[i]).
/// The beta-density factor is carried in log form; where a shape parameter is
/// below 1 the endpoint singularity is absorbed analytically by a change of
/// variables, so exp(logg) stays bounded on the nodes.
struct NodeSet {
  std::vector<double> theta;
  std::vector<double> logg;
  std::vector<double> weight;
};

/// Nodes for the plain prior integral (q = 1): one Gauss-Legendre panel per
/// half-support, with singularity handling as above.
NodeSet build_prior_nodes(const prior::BetaMixturePrior& p, int order);

/// Nodes for the posterior integrals at observation d with noise sd sigma.
/// Panels follow the Gaussian factor: split at theta = d when interior, at
/// most ~25 log-units of Gaussian variation per panel, and a window that
/// discards regions more than ~300 log-units below the peak.
NodeSet build_posterior_nodes(const prior::BetaMixturePrior& p, double d, double sigma,
                              int order);

}  // namespace betashrink::shrinkage::detail
