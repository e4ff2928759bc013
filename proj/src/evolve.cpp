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

#include "latscat/evolve.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "latscat/error.hpp"

namespace latscat {

void LatticeConfig::validate() const {
  if (n_sites < 3) throw Error(ErrorKind::InvalidConfig, "lattice needs at least 3 sites");
  if (!(t0 > 0.0)) throw Error(ErrorKind::InvalidConfig, "hopping t0 must be positive");
  if (barrier) {
    barrier->validate();
    if (barrier->start_site < 1 || barrier->last_site() > n_sites) {
      std::ostringstream msg;
      msg << "barrier sites [" << barrier->start_site << ", " << barrier->last_site()
          << "] do not fit in [1, " << n_sites << "]";
      throw Error(ErrorKind::BarrierOutOfRange, msg.str());
    }
  }
}

void GaussianPacketSpec::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw Error(ErrorKind::InvalidConfig, "packet width alpha must be positive");
  if (!std::isfinite(x0) || !std::isfinite(k0))
    throw Error(ErrorKind::InvalidConfig, "packet centroid and wave vector must be finite");
}

SymmetricMatrix::SymmetricMatrix(int n)
    : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {}

SymmetricMatrix build_hamiltonian(const LatticeConfig& config) {
  config.validate();
  const int n = config.n_sites;
  SymmetricMatrix h(n);
  for (int i = 0; i + 1 < n; ++i) {
    h(i, i + 1) = -config.t0;
    h(i + 1, i) = -config.t0;
  }
  h(0, n - 1) = -config.t0;
  h(n - 1, 0) = -config.t0;
  if (config.barrier) {
    const BarrierSpec& b = *config.barrier;
    for (int j = 0; j < b.n_impurities; ++j) {
      const int row = b.start_site + j * b.spacing - 1;
      h(row, row) += b.strength;
    }
  }
  return h;
}

double EigenSystem::residual(const SymmetricMatrix& h, int mode) const {
  const auto column = std::span<const double>(eigenvectors)
                          .subspan(static_cast<std::size_t>(mode) * static_cast<std::size_t>(n),
                                   static_cast<std::size_t>(n));
  const double e = eigenvalues[static_cast<std::size_t>(mode)];
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    double hv = 0.0;
    for (int j = 0; j < n; ++j) hv += h(i, j) * column[static_cast<std::size_t>(j)];
    const double r = hv - e * column[static_cast<std::size_t>(i)];
    sum += r * r;
  }
  return std::sqrt(sum);
}

EigenSystem diagonalize(const SymmetricMatrix& h) {
  EigenSystem eig;
  eig.n = h.size();
  eig.eigenvectors.assign(h.data().begin(), h.data().end());
  eig.eigenvalues.resize(static_cast<std::size_t>(eig.n));
  const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'U', eig.n,
                                         eig.eigenvectors.data(), eig.n, eig.eigenvalues.data());
  if (info != 0) {
    std::ostringstream msg;
    msg << "dsyevd failed with info = " << info;
    throw std::runtime_error(msg.str());
  }
  return eig;
}

double WaveFunction::norm() const {
  double sum = 0.0;
  for (const Complex& c : amplitudes) sum += std::norm(c);
  return std::sqrt(sum);
}

std::vector<double> WaveFunction::density() const {
  std::vector<double> out(amplitudes.size());
  std::transform(amplitudes.begin(), amplitudes.end(), out.begin(),
                 [](const Complex& c) { return std::norm(c); });
  return out;
}

Complex gaussian_profile(const GaussianPacketSpec& spec, double x) {
  const double dx = x - spec.x0;
  const double prefactor = std::pow(2.0 * std::numbers::pi * spec.alpha * spec.alpha, -0.25);
  return prefactor * std::exp(Complex(-dx * dx / (4.0 * spec.alpha * spec.alpha), spec.k0 * dx));
}

WaveFunction initial_packet(const GaussianPacketSpec& spec, const LatticeConfig& config) {
  spec.validate();
  config.validate();
  if (spec.x0 - 5.0 * spec.alpha < 1.0 || spec.x0 + 5.0 * spec.alpha > config.n_sites) {
    std::ostringstream msg;
    msg << "packet x0 = " << spec.x0 << ", alpha = " << spec.alpha << " does not fit in [1, "
        << config.n_sites << "] with 5 alpha clearance";
    throw Error(ErrorKind::PacketOutOfRange, msg.str());
  }
  WaveFunction psi;
  psi.amplitudes.resize(static_cast<std::size_t>(config.n_sites));
  for (int site = 1; site <= config.n_sites; ++site)
    psi.amplitudes[static_cast<std::size_t>(site - 1)] = gaussian_profile(spec, site);
  const double norm = psi.norm();
  for (Complex& c : psi.amplitudes) c /= norm;
  return psi;
}

Propagator::Propagator(const EigenSystem& eig, const WaveFunction& psi0)
    : eig_(&eig), coeffs_(static_cast<std::size_t>(eig.n)) {
  if (psi0.size() != static_cast<std::size_t>(eig.n))
    throw std::invalid_argument("Propagator: wave function and eigen system sizes differ");
  kernels::omp::project(eig.modes(), psi0.amplitudes, coeffs_);
}

WaveFunction Propagator::at(double t) const {
  if (t < 0.0) throw std::invalid_argument("Propagator: t must be >= 0");
  std::vector<Complex> weights(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    weights[j] = coeffs_[j] * std::polar(1.0, -eig_->eigenvalues[j] * t);
  WaveFunction psi;
  psi.time = t;
  psi.amplitudes.resize(coeffs_.size());
  kernels::omp::reconstruct(eig_->modes(), weights, psi.amplitudes);
  return psi;
}

WaveFunction evolve_to(const EigenSystem& eig, const WaveFunction& psi0, double t) {
  return Propagator(eig, psi0).at(t);
}

Complex free_packet_analytic(const GaussianPacketSpec& spec, double t, double x,
                             const DispersionParams& params) {
  const double a2 = spec.alpha * spec.alpha;
  const double e0 = params.energy(spec.k0);
  const double e1 = params.group_velocity(spec.k0);
  const double e2 = params.curvature(spec.k0);
  const Complex spread(a2, t * e2 / 2.0);
  const double shifted = x - spec.x0 - t * e1;
  const Complex phase(0.0, spec.k0 * (x - spec.x0) - e0 * t);
  return std::pow(a2 / (2.0 * std::numbers::pi), 0.25) / std::sqrt(spread) *
         std::exp(phase - 0.25 * shifted * shifted / spread);
}

RegionProbabilities split_probabilities(const WaveFunction& psi, int first_site, int last_site) {
  RegionProbabilities p;
  const int n = static_cast<int>(psi.size());
  for (int site = 1; site <= n; ++site) {
    const double d = std::norm(psi.at_site(site));
    if (site < first_site)
      p.left += d;
    else if (site <= last_site)
      p.barrier += d;
    else
      p.right += d;
  }
  return p;
}

RegionProbabilities split_probabilities(const WaveFunction& psi, const BarrierSpec& barrier) {
  return split_probabilities(psi, barrier.start_site, barrier.last_site());
}

Snapshot take_snapshot(const WaveFunction& psi, int first_site, int last_site) {
  return {psi.time, psi.density(), split_probabilities(psi, first_site, last_site)};
}

std::vector<Complex> apply_hamiltonian(const LatticeConfig& config, std::span<const Complex> psi) {
  const int n = config.n_sites;
  if (psi.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("apply_hamiltonian: size mismatch");
  std::vector<Complex> out(psi.size());
  for (int i = 0; i < n; ++i) {
    const int left = (i + n - 1) % n;
    const int right = (i + 1) % n;
    out[static_cast<std::size_t>(i)] =
        -config.t0 * (psi[static_cast<std::size_t>(left)] + psi[static_cast<std::size_t>(right)]);
  }
  if (config.barrier) {
    const BarrierSpec& b = *config.barrier;
    for (int j = 0; j < b.n_impurities; ++j) {
      const auto i = static_cast<std::size_t>(b.start_site + j * b.spacing - 1);
      out[i] += b.strength * psi[i];
    }
  }
  return out;
}

double energy_expectation(const LatticeConfig& config, const WaveFunction& psi) {
  const std::vector<Complex> h_psi = apply_hamiltonian(config, psi.amplitudes);
  Complex sum = 0.0;
  for (std::size_t i = 0; i < h_psi.size(); ++i) sum += std::conj(psi.amplitudes[i]) * h_psi[i];
  return sum.real();
}

DensityMoments density_moments(const WaveFunction& psi, int first_site, int last_site) {
  first_site = std::max(first_site, 1);
  last_site = std::min(last_site, static_cast<int>(psi.size()));
  DensityMoments m;
  double first = 0.0;
  for (int site = first_site; site <= last_site; ++site) {
    const double d = std::norm(psi.at_site(site));
    m.weight += d;
    first += d * site;
  }
  if (m.weight <= 0.0) return m;
  m.centroid = first / m.weight;
  double second = 0.0;
  for (int site = first_site; site <= last_site; ++site) {
    const double dx = site - m.centroid;
    second += std::norm(psi.at_site(site)) * dx * dx;
  }
  m.width = std::sqrt(second / m.weight);
  return m;
}

void check_boundary_clear(const WaveFunction& psi, int margin_sites, double threshold) {
  const int n = static_cast<int>(psi.size());
  for (int offset = 0; offset < std::min(margin_sites, n); ++offset) {
    for (int site : {1 + offset, n - offset}) {
      const double magnitude = std::abs(psi.at_site(site));
      if (magnitude > threshold) {
        std::ostringstream msg;
        msg << "|psi| = " << magnitude << " at site " << site << " (t = " << psi.time
            << ") is within " << margin_sites << " sites of the periodic seam";
        throw Error(ErrorKind::BoundaryWrap, msg.str());
      }
    }
  }
}

double mean_abs_wavevector(std::span<const Complex> amplitudes, int min_grid) {
  const int n = static_cast<int>(amplitudes.size());
  const int grid = std::max(n, min_grid);
  double weighted = 0.0, total = 0.0;
  for (int j = 0; j < grid; ++j) {
    // k in (-pi, pi]
    double k = 2.0 * std::numbers::pi * j / grid;
    if (k > std::numbers::pi) k -= 2.0 * std::numbers::pi;
    const Complex step = std::polar(1.0, -k);
    Complex phasor = 1.0;
    Complex sum = 0.0;
    for (int l = 0; l < n; ++l) {
      sum += amplitudes[static_cast<std::size_t>(l)] * phasor;
      phasor *= step;
    }
    const double power = std::norm(sum);
    weighted += std::abs(k) * power;
    total += power;
  }
  return total > 0.0 ? weighted / total : 0.0;
}

}  // namespace latscat
