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

#include "latscat/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "latscat/error.hpp"

namespace latscat {

namespace {

constexpr double kResonanceTolerance = 1e-8;
constexpr double kCurvatureStep = 1e-4;

Complex left_rho(double k, const BarrierSpec& barrier, const DispersionParams& params) {
  return amplitudes(k, barrier, params).rho;
}

Complex central_difference(double k0, double h, const BarrierSpec& barrier,
                           const DispersionParams& params) {
  return (left_rho(k0 + h, barrier, params) - left_rho(k0 - h, barrier, params)) / (2.0 * h);
}

Complex second_difference(double k0, double h, const BarrierSpec& barrier,
                          const DispersionParams& params) {
  return (left_rho(k0 + h, barrier, params) - 2.0 * left_rho(k0, barrier, params) +
          left_rho(k0 - h, barrier, params)) /
         (h * h);
}

// Composite Simpson on [lo, hi] with an even number of panels.
template <typename F>
double simpson(F&& f, double lo, double hi, int panels) {
  if (panels % 2 == 1) ++panels;
  const double h = (hi - lo) / panels;
  double sum = f(lo) + f(hi);
  for (int i = 1; i < panels; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f(lo + i * h);
  return sum * h / 3.0;
}

}  // namespace

double f_of_k(double k, const BarrierSpec& barrier, const DispersionParams& params) {
  return chebyshev_terms(k, barrier, params).f();
}

Complex rho_derivative(double k0, const BarrierSpec& barrier, const DispersionParams& params,
                       double step) {
  const double rho0 = std::abs(left_rho(k0, barrier, params));
  if (rho0 > kResonanceTolerance) {
    std::ostringstream msg;
    msg << "|rho(k0)| = " << rho0 << " at k0 a = " << k0 * params.a << ": not a resonance";
    throw Error(ErrorKind::NotResonant, msg.str());
  }
  const Complex coarse = central_difference(k0, step, barrier, params);
  const Complex fine = central_difference(k0, step / 2.0, barrier, params);
  return (4.0 * fine - coarse) / 3.0;
}

ResonantExpansion expand_at_resonance(double k0, const BarrierSpec& barrier,
                                      const DispersionParams& params) {
  ResonantExpansion e;
  e.k0 = k0;
  const Complex slope = rho_derivative(k0, barrier, params);
  e.rho_prime_abs2 = std::norm(slope);
  const Complex curvature = (4.0 * second_difference(k0, kCurvatureStep / 2.0, barrier, params) -
                             second_difference(k0, kCurvatureStep, barrier, params)) /
                            3.0;
  e.reflection_shift = (curvature / (2.0 * slope)).imag();
  if (barrier.n_impurities == 2 && barrier.spacing == 1) {
    const double ka = k0 * params.a;
    e.second_order_coeff = -std::cos(ka) / std::sin(ka);
  }
  return e;
}

double reflection_near_resonance(double k, const ResonantExpansion& expansion, int order,
                                 const DispersionParams& params) {
  const double q = k - expansion.k0;
  if (std::abs(q) * params.a >= 0.5)
    throw std::invalid_argument("reflection_near_resonance: |k - k0| a must be < 0.5");
  const double first = expansion.rho_prime_abs2 * q * q;
  if (order == 1) return first;
  if (order != 2) throw std::invalid_argument("reflection_near_resonance: order must be 1 or 2");
  if (!expansion.second_order_coeff)
    throw std::invalid_argument("second-order coefficient is only derived for N = 2, m = 1");
  return first * (1.0 + *expansion.second_order_coeff * params.a * q);
}

double SplitGaussianParams::scale(double t) const {
  const double ut = u(t);
  return std::sqrt(2.0 * alpha * alpha * (1.0 + ut * ut));
}

double split_gaussian_density(double x, double t, const SplitGaussianParams& p) {
  const double ut = p.u(t);
  const double y = (x - p.origin - p.e_prime * t) / p.scale(t);
  const double y2 = y * y;
  return p.rho_prime_abs2 / std::sqrt(2.0 * std::numbers::pi) * y2 * std::exp(-y2) /
         (2.0 * p.alpha * p.alpha * std::sqrt(p.alpha * p.alpha * (1.0 + ut * ut)));
}

double split_gaussian_total(const SplitGaussianParams& p) {
  return p.rho_prime_abs2 / (4.0 * p.alpha * p.alpha);
}

double split_gaussian_quadrature(const SplitGaussianParams& p, double t) {
  const double c = p.centroid(t);
  const double w = p.scale(t);
  return simpson([&](double x) { return split_gaussian_density(x, t, p); }, c - 12.0 * w,
                 c + 12.0 * w, 4000);
}

SplitGaussianParams reflected_split_gaussian(const ResonantExpansion& expansion,
                                             const GaussianPacketSpec& packet,
                                             const BarrierSpec& barrier,
                                             const DispersionParams& params) {
  SplitGaussianParams p;
  p.alpha = packet.alpha;
  p.k0 = expansion.k0;
  p.e_prime = -params.group_velocity(expansion.k0);
  p.e_double_prime = params.curvature(expansion.k0);
  p.rho_prime_abs2 = expansion.rho_prime_abs2;
  const double mirror = barrier.start_site * params.a;
  p.origin = 2.0 * mirror + expansion.reflection_shift - packet.x0;
  return p;
}

double packet_averaged_reflection(const GaussianPacketSpec& packet, const BarrierSpec& barrier,
                                  const DispersionParams& params) {
  // |phi(k)|^2 = sqrt(2/pi) alpha exp(-2 alpha^2 (k - k0)^2); +-12 sigma_k
  const double reach = 12.0 / (2.0 * packet.alpha);
  const double edge = 1e-6 / params.a;
  const double lo = std::max(packet.k0 - reach, edge);
  const double hi = std::min(packet.k0 + reach, std::numbers::pi / params.a - edge);
  const double a2 = packet.alpha * packet.alpha;
  return simpson(
      [&](double k) {
        const double q = k - packet.k0;
        return std::sqrt(2.0 / std::numbers::pi) * packet.alpha * std::exp(-2.0 * a2 * q * q) *
               reflection(k, barrier, params);
      },
      lo, hi, 8000);
}

double relative_l2_error(std::span<const double> numeric, std::span<const double> analytic) {
  if (numeric.size() != analytic.size())
    throw std::invalid_argument("relative_l2_error: size mismatch");
  double diff = 0.0, ref = 0.0;
  for (std::size_t i = 0; i < numeric.size(); ++i) {
    const double d = numeric[i] - analytic[i];
    diff += d * d;
    ref += numeric[i] * numeric[i];
  }
  return std::sqrt(diff / ref);
}

}  // namespace latscat
