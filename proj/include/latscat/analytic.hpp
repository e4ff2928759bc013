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

#include <optional>
#include <span>

#include "latscat/evolve.hpp"
#include "latscat/planewave.hpp"

namespace latscat {

/// f(k) = v_k U_{N-1}(h_k), so that R = f^2 / (1 + f^2).
double f_of_k(double k, const BarrierSpec& barrier, const DispersionParams& params = {});

/// d rho / dk at a resonant k0 by a central difference with step `step`,
/// Richardson-extrapolated once. Throws NotResonant if |rho(k0)| > 1e-8.
Complex rho_derivative(double k0, const BarrierSpec& barrier, const DispersionParams& params = {},
                       double step = 1e-6);

/// Low-order description of rho(k) about a resonance k0:
/// rho(k) ~ rho'(k0) (k - k0) exp(i shift (k - k0)).
struct ResonantExpansion {
  double k0 = 0.0;
  /// |rho'(k0)|^2 in units of a^2.
  double rho_prime_abs2 = 0.0;
  /// c in R ~ |rho'|^2 (k - k0)^2 [1 + c a (k - k0)]. Only derived for the
  /// adjacent dimer (N = 2, m = 1), where c = -cot(k0 a).
  std::optional<double> second_order_coeff;
  /// Im(rho'' / 2 rho') at k0, in units of a. The reflected packet emerges
  /// this far behind a mirror image taken about the first impurity.
  double reflection_shift = 0.0;
};

ResonantExpansion expand_at_resonance(double k0, const BarrierSpec& barrier,
                                      const DispersionParams& params = {});

/// order 1: |rho'|^2 (k - k0)^2; order 2 adds the [1 + c a (k - k0)] factor.
/// Requires |k - k0| a < 0.5.
double reflection_near_resonance(double k, const ResonantExpansion& expansion, int order,
                                 const DispersionParams& params = {});

/// Parameters of the split-Gaussian reflected profile. `origin` is the
/// position the reflected centroid extrapolates back to at t = 0, and
/// e_prime is the signed centroid velocity (negative for a reflected packet).
struct SplitGaussianParams {
  double alpha = 50.0;
  double k0 = 0.0;
  double e_prime = 0.0;
  double e_double_prime = 0.0;
  double rho_prime_abs2 = 0.0;
  double origin = 0.0;

  double u(double t) const { return e_double_prime * t / (2.0 * alpha * alpha); }
  /// sqrt(2 alpha^2 [1 + u^2]): distance from the node to either peak.
  double scale(double t) const;
  double centroid(double t) const { return origin + e_prime * t; }
};

/// |rho'|^2 / sqrt(2 pi) * y^2 exp(-y^2) / (2 alpha^2 sqrt(alpha^2 [1 + u^2]))
/// with y = (x - origin - e_prime t) / scale(t).
double split_gaussian_density(double x, double t, const SplitGaussianParams& p);

/// Closed-form integral of split_gaussian_density over x: |rho'|^2 / (4 alpha^2).
double split_gaussian_total(const SplitGaussianParams& p);

/// Simpson quadrature of split_gaussian_density over x at time t.
double split_gaussian_quadrature(const SplitGaussianParams& p, double t);

/// Split Gaussian for the packet reflected off `barrier`, centred on the
/// mirror image of the incident ballistic path.
SplitGaussianParams reflected_split_gaussian(const ResonantExpansion& expansion,
                                             const GaussianPacketSpec& packet,
                                             const BarrierSpec& barrier,
                                             const DispersionParams& params = {});

/// Integral of |phi_{k0}(k)|^2 R(k) over k: the plane-wave reflection
/// averaged over the packet's momentum distribution.
double packet_averaged_reflection(const GaussianPacketSpec& packet, const BarrierSpec& barrier,
                                  const DispersionParams& params = {});

/// ||numeric - analytic||_2 / ||numeric||_2.
double relative_l2_error(std::span<const double> numeric, std::span<const double> analytic);

}  // namespace latscat
