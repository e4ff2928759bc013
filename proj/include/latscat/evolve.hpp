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

#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "latscat/kernels.hpp"
#include "latscat/planewave.hpp"

namespace latscat {

/// Periodic chain of n_sites sites (site L + 1 is site 1) with hopping t0 and
/// an optional barrier. Sites are numbered from 1; lattice spacing a = 1.
struct LatticeConfig {
  int n_sites = 3000;
  double t0 = 1.0;
  std::optional<BarrierSpec> barrier;

  /// Throws InvalidConfig for L < 3 or t0 <= 0, BarrierOutOfRange if an
  /// impurity falls outside [1, L].
  void validate() const;
  DispersionParams dispersion() const { return {t0, 1.0}; }
};

struct GaussianPacketSpec {
  double x0 = 600.0;
  double k0 = std::numbers::pi / 2.0;
  double alpha = 50.0;

  void validate() const;
};

/// Dense real symmetric matrix, column-major.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int n);

  int size() const { return n_; }
  double& operator()(int row, int col) { return data_[index(row, col)]; }
  double operator()(int row, int col) const { return data_[index(row, col)]; }
  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(col) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(row);
  }

  int n_;
  std::vector<double> data_;
};

/// -t0 on the off-diagonals and the periodic corners, V on impurity sites.
/// Row i corresponds to site i + 1.
SymmetricMatrix build_hamiltonian(const LatticeConfig& config);

/// Eigenpairs of a lattice Hamiltonian, eigenvalues ascending. Immutable once
/// built and safe to share between threads.
struct EigenSystem {
  int n = 0;
  std::vector<double> eigenvalues;
  /// Column-major; column j is the eigenvector of eigenvalues[j].
  std::vector<double> eigenvectors;

  kernels::ModeMatrix modes() const { return {eigenvectors, n}; }
  /// || H v_j - e_j v_j ||_2.
  double residual(const SymmetricMatrix& h, int mode) const;
};

/// Full dense diagonalisation (LAPACK dsyevd).
EigenSystem diagonalize(const SymmetricMatrix& h);

struct WaveFunction {
  std::vector<Complex> amplitudes;
  double time = 0.0;

  std::size_t size() const { return amplitudes.size(); }
  /// Amplitude on a 1-based site.
  Complex at_site(int site) const { return amplitudes[static_cast<std::size_t>(site - 1)]; }
  double norm() const;
  std::vector<double> density() const;
};

/// Unnormalised profile (2 pi alpha^2)^{-1/4} exp[-(x - x0)^2 / (4 alpha^2) + i k0 (x - x0)].
Complex gaussian_profile(const GaussianPacketSpec& spec, double x);

/// gaussian_profile sampled on sites 1..L and scaled to unit norm. Throws
/// PacketOutOfRange unless x0 +- 5 alpha lies inside [1, L].
WaveFunction initial_packet(const GaussianPacketSpec& spec, const LatticeConfig& config);

/// Expands psi0 once in the eigenbasis, then evaluates
/// psi(t) = sum_n a^{(n)} <n|psi0> exp(-i e_n t) for any number of times.
/// Holds a reference to the eigen system, which must outlive it.
class Propagator {
 public:
  Propagator(const EigenSystem& eig, const WaveFunction& psi0);

  WaveFunction at(double t) const;
  std::span<const Complex> coefficients() const { return coeffs_; }

 private:
  const EigenSystem* eig_;
  std::vector<Complex> coeffs_;
};

WaveFunction evolve_to(const EigenSystem& eig, const WaveFunction& psi0, double t);

/// Closed-form empty-lattice packet at time t, expanding E_k to second order
/// about k0. The displaced coordinate x - x0 - E' t enters squared.
Complex free_packet_analytic(const GaussianPacketSpec& spec, double t, double x,
                             const DispersionParams& params = {});

struct RegionProbabilities {
  double left = 0.0;
  double barrier = 0.0;
  double right = 0.0;

  double total() const { return left + barrier + right; }
};

/// Probability on sites < first_site, in [first_site, last_site] and > last_site.
RegionProbabilities split_probabilities(const WaveFunction& psi, int first_site, int last_site);
RegionProbabilities split_probabilities(const WaveFunction& psi, const BarrierSpec& barrier);

struct Snapshot {
  double time = 0.0;
  /// a |psi_l|^2 per site.
  std::vector<double> density;
  RegionProbabilities probabilities;
};

Snapshot take_snapshot(const WaveFunction& psi, int first_site, int last_site);

/// H psi without forming H.
std::vector<Complex> apply_hamiltonian(const LatticeConfig& config, std::span<const Complex> psi);
double energy_expectation(const LatticeConfig& config, const WaveFunction& psi);

struct DensityMoments {
  double weight = 0.0;
  double centroid = 0.0;
  /// Square root of the second central moment; alpha for the initial packet.
  double width = 0.0;
};

/// Moments of |psi|^2 restricted to sites [first_site, last_site].
DensityMoments density_moments(const WaveFunction& psi, int first_site, int last_site);

/// Throws BoundaryWrap if |psi| exceeds threshold within margin_sites of the
/// periodic seam between site L and site 1. The default threshold leaves the
/// 3000-site, alpha = 50 layout (tails of order 1e-8 at the seam) usable.
void check_boundary_clear(const WaveFunction& psi, int margin_sites = 10, double threshold = 1e-6);

/// Mean |k| of a run of site amplitudes, weighted by the discrete Fourier
/// power on a zero-padded grid over (-pi, pi].
double mean_abs_wavevector(std::span<const Complex> amplitudes, int min_grid = 4096);

}  // namespace latscat
