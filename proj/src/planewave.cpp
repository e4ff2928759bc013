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

#include "latscat/planewave.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "latscat/chebyshev.hpp"
#include "latscat/error.hpp"

namespace latscat {

namespace {

constexpr double kBandEdgeTolerance = 1e-12;
constexpr double kTimeReversalTolerance = 1e-10;

}  // namespace

void BarrierSpec::validate() const {
  if (n_impurities < 1)
    throw Error(ErrorKind::InvalidConfig, "barrier needs at least one impurity");
  if (spacing < 1)
    throw Error(ErrorKind::InvalidConfig, "barrier spacing must be >= 1");
  if (!std::isfinite(strength))
    throw Error(ErrorKind::InvalidConfig, "barrier strength must be finite");
}

double DispersionParams::energy(double k) const { return -2.0 * t0 * std::cos(k * a); }

double DispersionParams::group_velocity(double k) const {
  return 2.0 * t0 * a * std::sin(k * a);
}

double DispersionParams::curvature(double k) const {
  return 2.0 * t0 * a * a * std::cos(k * a);
}

TransferMatrix2 operator*(const TransferMatrix2& lhs, const TransferMatrix2& rhs) {
  return {lhs.m11 * rhs.m11 + lhs.m12 * rhs.m21, lhs.m11 * rhs.m12 + lhs.m12 * rhs.m22,
          lhs.m21 * rhs.m11 + lhs.m22 * rhs.m21, lhs.m21 * rhs.m12 + lhs.m22 * rhs.m22};
}

void require_off_band_edge(double k, const DispersionParams& params) {
  if (std::abs(std::sin(k * params.a)) < kBandEdgeTolerance) {
    std::ostringstream msg;
    msg << "ka = " << k * params.a << " is at a band edge; amplitudes are undefined";
    throw Error(ErrorKind::BandEdge, msg.str());
  }
}

TransferMatrix2 site_matrix(double k, double v_tilde, const DispersionParams& params) {
  require_off_band_edge(k, params);
  const double ka = k * params.a;
  const Complex g = std::polar(1.0, ka);
  const Complex gc = std::conj(g);
  // V / (2i sin ka)
  const Complex x = v_tilde / (Complex(0.0, 2.0) * std::sin(ka));
  return {g * (1.0 + x), g * x, -gc * x, gc * (1.0 - x)};
}

TransferMatrix2 free_hop_matrix(double k, int hops, const DispersionParams& params) {
  if (hops < 0) throw std::invalid_argument("free_hop_matrix: hops must be >= 0");
  const double phase = k * params.a * hops;
  return {std::polar(1.0, phase), 0.0, 0.0, std::polar(1.0, -phase)};
}

TransferMatrix2 barrier_matrix(double k, const BarrierSpec& barrier,
                               const DispersionParams& params) {
  barrier.validate();
  const TransferMatrix2 site = site_matrix(k, barrier.strength / params.t0, params);
  const TransferMatrix2 cell = free_hop_matrix(k, barrier.spacing - 1, params) * site;
  TransferMatrix2 total = site;
  for (int j = 1; j < barrier.n_impurities; ++j) total = total * cell;
  return total;
}

ChebyshevTerms chebyshev_terms(double k, const BarrierSpec& barrier,
                               const DispersionParams& params) {
  barrier.validate();
  require_off_band_edge(k, params);
  const double ka = k * params.a;
  const double kma = ka * barrier.spacing;
  ChebyshevTerms terms;
  terms.v = barrier.strength / (2.0 * params.t0 * std::sin(ka));
  terms.h = std::cos(kma) + terms.v * std::sin(kma);
  terms.u = cheb_u(barrier.n_impurities - 1, terms.h);
  return terms;
}

double transmission(double k, const BarrierSpec& barrier, const DispersionParams& params) {
  const double f = chebyshev_terms(k, barrier, params).f();
  return 1.0 / (1.0 + f * f);
}

double reflection(double k, const BarrierSpec& barrier, const DispersionParams& params) {
  const double f = chebyshev_terms(k, barrier, params).f();
  const double f2 = f * f;
  return f2 / (1.0 + f2);
}

ScatteringAmplitudes amplitudes(double k, const BarrierSpec& barrier,
                                const DispersionParams& params) {
  const TransferMatrix2 m = barrier_matrix(k, barrier, params);
  // |M11| = |M22| holds for real V; checked rather than assumed
  const double a11 = std::abs(m.m11);
  const double a22 = std::abs(m.m22);
  if (std::abs(a11 - a22) > kTimeReversalTolerance * std::max(1.0, a22))
    throw std::logic_error("transfer matrix violates |M11| = |M22|");
  return {-m.m21 / m.m22, 1.0 / m.m22, k};
}

Complex reflection_amplitude_from_right(double k, const BarrierSpec& barrier,
                                        const DispersionParams& params) {
  const TransferMatrix2 m = barrier_matrix(k, barrier, params);
  return m.m12 / m.m22;
}

}  // namespace latscat
