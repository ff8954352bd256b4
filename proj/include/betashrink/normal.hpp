// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 betashrink contributors
#pragma once

namespace betashrink::normal {

/// Standard normal density.
double pdf(double x);

/// Standard normal CDF, computed via erfc for accuracy in both tails.
double cdf(double x);

/// Inverse of cdf. Accepts p in (0, 1); throws std::invalid_argument otherwise.
double quantile(double p);

}  // namespace betashrink::normal
