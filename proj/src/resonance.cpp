/* Copyright 2026 The latscat Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "latscat/resonance.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "latscat/chebyshev.hpp"
#include "latscat/error.hpp"

namespace latscat {

namespace {

constexpr double kRootTolerance = 1e-12;
constexpr double kUnitTransmissionTolerance = 1e-10;
constexpr double kMinSeparation = 1e-6;
constexpr double kEdgeExclusion = 1e-12;
constexpr int kMaxBisections = 200;

double resonance_function(double k, const BarrierSpec& barrier, const DispersionParams& params) {
  return chebyshev_terms(k, barrier, params).u;
}

// Bisection on [lo, hi] with g(lo) and g(hi) of opposite sign.
double bisect(double lo, double g_lo, double hi, const BarrierSpec& barrier,
              const DispersionParams& params) {
  for (int iter = 0; iter < kMaxBisections; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return mid;
    const double g_mid = resonance_function(mid, barrier, params);
    if (g_mid == 0.0) return mid;
    if (std::signbit(g_mid) == std::signbit(g_lo)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
    if (std::abs(g_mid) <= kRootTolerance && hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(hi))
      return mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ResonanceSet find_resonant_wavevectors(const BarrierSpec& barrier, const DispersionParams& params,
                                       const ResonanceSearch& search) {
  barrier.validate();
  if (search.grid_points < 1000)
    throw Error(ErrorKind::InvalidConfig, "resonance search needs at least 1000 grid points");
  if (!(search.ka_over_pi_min > 0.0 && search.ka_over_pi_max < 1.0 &&
        search.ka_over_pi_min < search.ka_over_pi_max))
    throw Error(ErrorKind::InvalidConfig, "resonance search interval must lie inside (0, 1)");

  ResonanceSet set;
  set.barrier = barrier;
  if (barrier.n_impurities < 2) return set;

  const double to_k = std::numbers::pi / params.a;
  const double k_lo = search.ka_over_pi_min * to_k;
  const double k_hi = search.ka_over_pi_max * to_k;
  const int n = search.grid_points;

  std::vector<double> roots;
  double k_prev = k_lo;
  double g_prev = resonance_function(k_prev, barrier, params);
  if (g_prev == 0.0) roots.push_back(k_prev);
  for (int i = 1; i < n; ++i) {
    const double k = k_lo + (k_hi - k_lo) * i / (n - 1);
    const double g = resonance_function(k, barrier, params);
    if (g == 0.0) {
      roots.push_back(k);
    } else if (g_prev != 0.0 && std::signbit(g) != std::signbit(g_prev)) {
      roots.push_back(bisect(k_prev, g_prev, k, barrier, params));
    }
    k_prev = k;
    g_prev = g;
  }

  for (double k : roots) {
    if (!set.wavevectors.empty() && k - set.wavevectors.back() < kMinSeparation) continue;
    if (std::abs(std::sin(k * params.a)) < kEdgeExclusion) {
      std::ostringstream msg;
      msg << "root at ka = " << k * params.a << " discarded: inside band-edge exclusion zone";
      set.warnings.push_back(msg.str());
      continue;
    }
    const double residual = 1.0 - transmission(k, barrier, params);
    if (residual > kUnitTransmissionTolerance) {
      std::ostringstream msg;
      msg << "root at ka = " << k * params.a << " has 1 - T = " << residual;
      throw std::logic_error(msg.str());
    }
    set.wavevectors.push_back(k);
    set.residuals.push_back(residual);
  }
  return set;
}

ResonanceSet find_resonant_wavevectors(const BarrierSpec& barrier, const DispersionParams& params,
                                       int grid_points) {
  ResonanceSearch search;
  search.grid_points = grid_points;
  return find_resonant_wavevectors(barrier, params, search);
}

double resonant_strength(double k, int n_impurities, int spacing, int root_index,
                         const DispersionParams& params) {
  if (n_impurities < 2 || spacing < 1)
    throw Error(ErrorKind::InvalidConfig, "resonant_strength needs N >= 2 and m >= 1");
  if (root_index < 1 || root_index > n_impurities - 1)
    throw Error(ErrorKind::InvalidConfig, "root_index must lie in [1, N - 1]");
  require_off_band_edge(k, params);

  const double ka = k * params.a;
  const double kma = ka * spacing;
  if (std::abs(std::sin(kma)) < 1e-12)
    throw Error(ErrorKind::DegenerateSpacing, "sin(kma) = 0: the strength drops out");

  const double h_root = cheb_u_roots(n_impurities - 1)[static_cast<std::size_t>(root_index - 1)];
  const double v_tilde = 2.0 * std::sin(ka) * (h_root - std::cos(kma)) / std::sin(kma);

  BarrierSpec barrier{n_impurities, spacing, v_tilde * params.t0, 1};
  const double residual = 1.0 - transmission(k, barrier, params);
  if (residual > kUnitTransmissionTolerance) {
    std::ostringstream msg;
    msg << "resonant strength " << v_tilde << " leaves 1 - T = " << residual;
    throw std::logic_error(msg.str());
  }
  return v_tilde;
}

}  // namespace latscat
