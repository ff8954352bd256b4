// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 betashrink contributors
#include "betashrink/dwt.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "betashrink/kernels.hpp"

namespace betashrink::dwt {

namespace {

// Daubechies extremal-phase scaling filters, analysis orientation. Derived by
// spectral factorization of the half-band polynomial in 60-digit arithmetic;
// taps satisfy sum = sqrt(2) and shift-orthonormality to ~1e-20.
const std::vector<double> kDaub8LowPass = {
    -0.0001174767841247695337306, 0.0006754494064505693663695,
    -0.0003917403733769470462981, -0.004870352993451574310422,
    0.008746094047405776716383,   0.01398102791739828164872,
    -0.04408825393079475150676,   -0.01736930100180754616962,
    0.128747426620478458857,      0.0004724845739132827703606,
    -0.2840155429615469265162,    -0.01582910525634930566738,
    0.5853546836542067127713,     0.6756307362972898068078,
    0.3128715909142999706592,     0.05441584224310400995501,
};

const std::vector<double> kDaub10LowPass = {
    -0.00001326420289452124481244, 0.00009358867032006959133405,
    -0.0001164668551292854509515,  -0.0006858566949597116265614,
    0.001992405295185056117159,    0.001395351747052901165789,
    -0.01073317548333057504432,    0.003606553566956169655423,
    0.03321267405934100173976,     -0.02945753682187581285828,
    -0.07139414716639708714534,    0.09305736460357235116035,
    0.1273693403357932600827,      -0.1959462743773770435043,
    -0.2498464243273153794161,     0.2811723436605774607487,
    0.6884590394536035657419,      0.5272011889317255864817,
    0.1881768000776914890209,      0.02667005790055555358662,
};

// One analysis step: x (size 2w) -> approx, detail (size w each).
// approx[k] = sum_i h[i] x[(2k+i) mod 2w], detail likewise with g.
void analysis_step(const std::vector<double>& x, const WaveletFilter& f,
                   std::vector<double>& approx, std::vector<double>& detail) {
  const std::size_t n = x.size();
  const std::size_t l = f.low_pass.size();
  std::vector<double> ext(n + l - 1);
  for (std::size_t i = 0; i < ext.size(); ++i) ext[i] = x[i % n];
  const std::size_t w = n / 2;
  approx.resize(w);
  detail.resize(w);
  for (std::size_t k = 0; k < w; ++k) {
    approx[k] = kernels::dot(ext.data() + 2 * k, f.low_pass.data(), l);
    detail[k] = kernels::dot(ext.data() + 2 * k, f.high_pass.data(), l);
  }
}

// Adjoint of analysis_step, which is the exact inverse for an orthonormal bank.
std::vector<double> synthesis_step(const std::vector<double>& approx,
                                   const std::vector<double>& detail,
                                   const WaveletFilter& f) {
  const std::size_t w = approx.size();
  const std::size_t n = 2 * w;
  const std::size_t l = f.low_pass.size();
  std::vector<double> acc(n + l - 1, 0.0);
  for (std::size_t k = 0; k < w; ++k)
    kernels::axpy2(acc.data() + 2 * k, f.low_pass.data(), approx[k], f.high_pass.data(),
                   detail[k], l);
  for (std::size_t i = n; i < acc.size(); ++i) acc[i % n] += acc[i];  // fold the wrap
  acc.resize(n);
  return acc;
}

}  // namespace

bool is_dyadic(std::size_t n) { return n >= 1 && (n & (n - 1)) == 0; }

int log2_floor(std::size_t n) {
  if (n < 1) throw std::invalid_argument("log2_floor: n must be >= 1");
  int j = 0;
  while ((n >> (j + 1)) != 0) ++j;
  return j;
}

WaveletFilter WaveletFilter::from_low_pass(std::string name, std::vector<double> low_pass) {
  const std::size_t l = low_pass.size();
  if (l < 2 || l % 2 != 0)
    throw std::invalid_argument("WaveletFilter: tap count must be even and >= 2");
  const double sum = std::accumulate(low_pass.begin(), low_pass.end(), 0.0);
  const double sumsq = kernels::sum_squares(low_pass.data(), l);
  if (std::fabs(sum - std::sqrt(2.0)) > 1e-12)
    throw std::invalid_argument("WaveletFilter '" + name + "': taps do not sum to sqrt(2)");
  if (std::fabs(sumsq - 1.0) > 1e-12)
    throw std::invalid_argument("WaveletFilter '" + name + "': tap energy is not 1");
  WaveletFilter f;
  f.name = std::move(name);
  f.high_pass.resize(l);
  for (std::size_t i = 0; i < l; ++i)
    f.high_pass[i] = (i % 2 == 0 ? 1.0 : -1.0) * low_pass[l - 1 - i];
  f.low_pass = std::move(low_pass);
  return f;
}

const WaveletFilter& WaveletFilter::daub8() {
  static const WaveletFilter f = from_low_pass("daub8", kDaub8LowPass);
  return f;
}

const WaveletFilter& WaveletFilter::daub10() {
  static const WaveletFilter f = from_low_pass("daub10", kDaub10LowPass);
  return f;
}

const WaveletFilter& WaveletFilter::by_name(std::string_view name) {
  if (name == "daub8") return daub8();
  if (name == "daub10") return daub10();
  throw std::invalid_argument("unknown wavelet '" + std::string(name) +
                              "' (expected daub8 or daub10)");
}

std::vector<double>& CoefficientPyramid::level(int j) {
  if (!has_level(j))
    throw std::invalid_argument("CoefficientPyramid: no detail level " + std::to_string(j));
  return details[static_cast<std::size_t>(j - j0)];
}

const std::vector<double>& CoefficientPyramid::level(int j) const {
  if (!has_level(j))
    throw std::invalid_argument("CoefficientPyramid: no detail level " + std::to_string(j));
  return details[static_cast<std::size_t>(j - j0)];
}

std::vector<double> CoefficientPyramid::flatten() const {
  std::vector<double> out;
  out.reserve(n);
  out.insert(out.end(), coarse.begin(), coarse.end());
  for (const auto& lvl : details) out.insert(out.end(), lvl.begin(), lvl.end());
  return out;
}

std::size_t CoefficientPyramid::detail_count() const {
  std::size_t c = 0;
  for (const auto& lvl : details) c += lvl.size();
  return c;
}

void validate_shape(const CoefficientPyramid& p) {
  if (p.j0 < 0) throw std::invalid_argument("pyramid: j0 must be >= 0");
  const std::size_t coarse_expected = std::size_t{1} << p.j0;
  if (p.coarse.size() != coarse_expected)
    throw std::invalid_argument("pyramid: coarse size " + std::to_string(p.coarse.size()) +
                                " != 2^j0 = " + std::to_string(coarse_expected));
  std::size_t total = p.coarse.size();
  for (int i = 0; i < p.num_levels(); ++i) {
    const std::size_t expected = std::size_t{1} << (p.j0 + i);
    if (p.details[i].size() != expected)
      throw std::invalid_argument("pyramid: level " + std::to_string(p.j0 + i) + " has " +
                                  std::to_string(p.details[i].size()) + " coefficients, expected " +
                                  std::to_string(expected));
    total += p.details[i].size();
  }
  if (total != p.n)
    throw std::invalid_argument("pyramid: coefficient count " + std::to_string(total) +
                                " != n = " + std::to_string(p.n));
}

CoefficientPyramid forward(std::span<const double> signal, const WaveletFilter& filter,
                           int j0) {
  const std::size_t n = signal.size();
  if (!is_dyadic(n))
    throw std::invalid_argument("forward: signal length " + std::to_string(n) +
                                " is not a power of two");
  const int big_j = log2_floor(n);
  if (j0 < 0 || j0 >= big_j)
    throw std::invalid_argument("forward: need 0 <= j0 < log2(n) = " + std::to_string(big_j));

  CoefficientPyramid p;
  p.j0 = j0;
  p.n = n;
  p.details.resize(static_cast<std::size_t>(big_j - j0));
  std::vector<double> current(signal.begin(), signal.end());
  for (int j = big_j - 1; j >= j0; --j) {
    std::vector<double> approx, detail;
    analysis_step(current, filter, approx, detail);
    p.details[static_cast<std::size_t>(j - j0)] = std::move(detail);
    current = std::move(approx);
  }
  p.coarse = std::move(current);
  return p;
}

std::vector<double> inverse(const CoefficientPyramid& pyramid, const WaveletFilter& filter) {
  validate_shape(pyramid);
  std::vector<double> current = pyramid.coarse;
  for (int i = 0; i < pyramid.num_levels(); ++i)
    current = synthesis_step(current, pyramid.details[static_cast<std::size_t>(i)], filter);
  return current;
}

}  // namespace betashrink::dwt
