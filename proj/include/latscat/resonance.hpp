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

#pragma once

#include <string>
#include <vector>

#include "latscat/planewave.hpp"

namespace latscat {

/// Resonant (unit transmission) wave vectors of one barrier, in units of 1/a.
struct ResonanceSet {
  BarrierSpec barrier;
  std::vector<double> wavevectors;
  /// 1 - T at each wave vector.
  std::vector<double> residuals;
  /// Roots dropped because they fell inside the band-edge exclusion zone.
  std::vector<std::string> warnings;

  bool empty() const { return wavevectors.empty(); }
  std::size_t size() const { return wavevectors.size(); }
};

struct ResonanceSearch {
  int grid_points = 4096;
  /// Scan interval in units of pi / a.
  double ka_over_pi_min = 0.01;
  double ka_over_pi_max = 0.99;
};

/// Zeros of g(k) = U_{N-1}(h_k) on (0, pi/a), bracketed by sign changes on a
/// uniform grid and refined by bisection. N = 1 yields an empty set.
ResonanceSet find_resonant_wavevectors(const BarrierSpec& barrier,
                                       const DispersionParams& params = {},
                                       const ResonanceSearch& search = {});

/// Convenience overload with the default interval.
ResonanceSet find_resonant_wavevectors(const BarrierSpec& barrier,
                                       const DispersionParams& params, int grid_points);

/// V / t0 that makes k resonant for N impurities at spacing m, using the
/// root_index-th (1-based, ascending) root of U_{N-1}.
double resonant_strength(double k, int n_impurities, int spacing, int root_index,
                         const DispersionParams& params = {});

}  // namespace latscat
