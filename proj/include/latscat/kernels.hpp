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

// Data-parallel inner loops of the simulation. Each kernel has a serial
// reference in kernels::serial that follows the defining formula directly,
// and an OpenMP version in kernels::omp that the library uses. Tests hold
// the two to agreement; bench/bench_kernels times them against each other.

#include <complex>
#include <span>

#include "latscat/planewave.hpp"

namespace latscat::kernels {

/// Column-major n x n block of real eigenvectors; column j is mode j.
struct ModeMatrix {
  std::span<const double> data;
  int n = 0;

  double operator()(int site, int mode) const {
    return data[static_cast<std::size_t>(mode) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(site)];
  }
};

namespace serial {

/// coeffs[j] = sum_l a_l^{(j)} psi_l (eigenvectors are real).
void project(ModeMatrix modes, std::span<const Complex> psi, std::span<Complex> coeffs);

/// psi_l = sum_j a_l^{(j)} weights[j].
void reconstruct(ModeMatrix modes, std::span<const Complex> weights, std::span<Complex> psi);

/// out[i] = T(k[i]) for the given barrier.
void transmission_scan(std::span<const double> k, const BarrierSpec& barrier,
                       const DispersionParams& params, std::span<double> out);

}  // namespace serial

namespace omp {

void project(ModeMatrix modes, std::span<const Complex> psi, std::span<Complex> coeffs);
void reconstruct(ModeMatrix modes, std::span<const Complex> weights, std::span<Complex> psi);
void transmission_scan(std::span<const double> k, const BarrierSpec& barrier,
                       const DispersionParams& params, std::span<double> out);

}  // namespace omp

}  // namespace latscat::kernels
