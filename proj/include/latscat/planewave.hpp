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

#include <complex>

namespace latscat {

using Complex = std::complex<double>;

/// N equal impurities of strength V (in units of t0) on sites
/// start_site, start_site + m, ..., start_site + (N - 1) m.
struct BarrierSpec {
  int n_impurities = 1;
  int spacing = 1;
  double strength = 1.0;
  int start_site = 1500;

  int last_site() const { return start_site + (n_impurities - 1) * spacing; }
  /// w_B = (N - 1) m, in lattice units.
  int width() const { return (n_impurities - 1) * spacing; }
  /// Throws Error(InvalidConfig) unless N >= 1 and m >= 1.
  void validate() const;
};

/// Nearest-neighbour dispersion E_k = -2 t0 cos(ka). hbar = 1 throughout,
/// so times are in units of hbar / t0.
struct DispersionParams {
  double t0 = 1.0;
  double a = 1.0;

  double energy(double k) const;
  /// dE/dk, which is also the group velocity with hbar = 1.
  double group_velocity(double k) const;
  double curvature(double k) const;
};

struct TransferMatrix2 {
  Complex m11{1.0, 0.0};
  Complex m12{0.0, 0.0};
  Complex m21{0.0, 0.0};
  Complex m22{1.0, 0.0};

  Complex det() const { return m11 * m22 - m12 * m21; }

  static TransferMatrix2 identity() { return {}; }
};

TransferMatrix2 operator*(const TransferMatrix2& lhs, const TransferMatrix2& rhs);

/// Amplitudes for a plane wave incident from the left: reflected rho and
/// transmitted tau, with phases referenced to the first impurity site.
struct ScatteringAmplitudes {
  Complex rho;
  Complex tau;
  double k = 0.0;
};

/// Ingredients of the closed form: v_k = V / (2 t0 sin ka),
/// h_k = cos(kma) + v_k sin(kma) and U_{N-1}(h_k).
struct ChebyshevTerms {
  double v = 0.0;
  double h = 0.0;
  double u = 0.0;

  double f() const { return v * u; }
};

/// Throws Error(BandEdge) when |sin(ka)| < 1e-12.
void require_off_band_edge(double k, const DispersionParams& params);

/// Transfer matrix of one site carrying potential v_tilde = V / t0,
/// including the hop onto the next site.
TransferMatrix2 site_matrix(double k, double v_tilde, const DispersionParams& params = {});

/// diag(e^{ikma}, e^{-ikma}); phases are taken directly from k m a.
TransferMatrix2 free_hop_matrix(double k, int hops, const DispersionParams& params = {});

/// Explicit product M_1 (M^{(m-1)} M_1)^{N-1}. Reference path for the closed
/// form; O(N) matrix products.
TransferMatrix2 barrier_matrix(double k, const BarrierSpec& barrier,
                               const DispersionParams& params = {});

ChebyshevTerms chebyshev_terms(double k, const BarrierSpec& barrier,
                               const DispersionParams& params = {});

/// T = 1 / (1 + [v_k U_{N-1}(h_k)]^2).
double transmission(double k, const BarrierSpec& barrier, const DispersionParams& params = {});

/// R = f^2 / (1 + f^2) with f = v_k U_{N-1}(h_k).
double reflection(double k, const BarrierSpec& barrier, const DispersionParams& params = {});

/// rho and tau from barrier_matrix. For incidence from the left,
/// (C, D) = M (A, B) with D = 0 gives rho = B/A = -M21/M22 and
/// tau = C/A = 1/M22.
ScatteringAmplitudes amplitudes(double k, const BarrierSpec& barrier,
                                const DispersionParams& params = {});

/// M12/M22: the reflection amplitude for a wave incident from the right.
Complex reflection_amplitude_from_right(double k, const BarrierSpec& barrier,
                                        const DispersionParams& params = {});

}  // namespace latscat
