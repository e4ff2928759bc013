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

#include <stdexcept>

#include "latscat/kernels.hpp"

namespace latscat::kernels::serial {

void project(ModeMatrix modes, std::span<const Complex> psi, std::span<Complex> coeffs) {
  const int n = modes.n;
  if (psi.size() != static_cast<std::size_t>(n) || coeffs.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("project: size mismatch");
  for (int j = 0; j < n; ++j) {
    Complex sum = 0.0;
    for (int l = 0; l < n; ++l) sum += modes(l, j) * psi[static_cast<std::size_t>(l)];
    coeffs[static_cast<std::size_t>(j)] = sum;
  }
}

void reconstruct(ModeMatrix modes, std::span<const Complex> weights, std::span<Complex> psi) {
  const int n = modes.n;
  if (psi.size() != static_cast<std::size_t>(n) || weights.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("reconstruct: size mismatch");
  for (int l = 0; l < n; ++l) {
    Complex sum = 0.0;
    for (int j = 0; j < n; ++j) sum += modes(l, j) * weights[static_cast<std::size_t>(j)];
    psi[static_cast<std::size_t>(l)] = sum;
  }
}

void transmission_scan(std::span<const double> k, const BarrierSpec& barrier,
                       const DispersionParams& params, std::span<double> out) {
  if (k.size() != out.size()) throw std::invalid_argument("transmission_scan: size mismatch");
  for (std::size_t i = 0; i < k.size(); ++i) out[i] = transmission(k[i], barrier, params);
}

}  // namespace latscat::kernels::serial
