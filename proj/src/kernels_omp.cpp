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

#include <omp.h>

#include <algorithm>
#include <exception>
#include <stdexcept>

#include "latscat/kernels.hpp"

namespace latscat::kernels::omp {

namespace {

// Rows handled per task in reconstruct; a block of psi stays in cache while
// the eigenvector columns stream past.
constexpr int kRowBlock = 256;

}  // namespace

void project(ModeMatrix modes, std::span<const Complex> psi, std::span<Complex> coeffs) {
  const int n = modes.n;
  if (psi.size() != static_cast<std::size_t>(n) || coeffs.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("project: size mismatch");
  const double* base = modes.data.data();
#pragma omp parallel for schedule(static)
  for (int j = 0; j < n; ++j) {
    const double* column = base + static_cast<std::size_t>(j) * static_cast<std::size_t>(n);
    double re = 0.0, im = 0.0;
    for (int l = 0; l < n; ++l) {
      re += column[l] * psi[static_cast<std::size_t>(l)].real();
      im += column[l] * psi[static_cast<std::size_t>(l)].imag();
    }
    coeffs[static_cast<std::size_t>(j)] = {re, im};
  }
}

void reconstruct(ModeMatrix modes, std::span<const Complex> weights, std::span<Complex> psi) {
  const int n = modes.n;
  if (psi.size() != static_cast<std::size_t>(n) || weights.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("reconstruct: size mismatch");
  const double* base = modes.data.data();
  const int blocks = (n + kRowBlock - 1) / kRowBlock;
#pragma omp parallel for schedule(static)
  for (int b = 0; b < blocks; ++b) {
    const int lo = b * kRowBlock;
    const int hi = std::min(n, lo + kRowBlock);
    double re[kRowBlock] = {};
    double im[kRowBlock] = {};
    for (int j = 0; j < n; ++j) {
      const double* column = base + static_cast<std::size_t>(j) * static_cast<std::size_t>(n);
      const double wr = weights[static_cast<std::size_t>(j)].real();
      const double wi = weights[static_cast<std::size_t>(j)].imag();
      for (int l = lo; l < hi; ++l) {
        re[l - lo] += column[l] * wr;
        im[l - lo] += column[l] * wi;
      }
    }
    for (int l = lo; l < hi; ++l) psi[static_cast<std::size_t>(l)] = {re[l - lo], im[l - lo]};
  }
}

void transmission_scan(std::span<const double> k, const BarrierSpec& barrier,
                       const DispersionParams& params, std::span<double> out) {
  if (k.size() != out.size()) throw std::invalid_argument("transmission_scan: size mismatch");
  const auto count = static_cast<std::ptrdiff_t>(k.size());
  // exceptions may not cross the parallel region; the first one is rethrown
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = transmission(k[static_cast<std::size_t>(i)], barrier, params);
    } catch (...) {
#pragma omp critical(latscat_scan_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace latscat::kernels::omp
