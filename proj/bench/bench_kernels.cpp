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

// Times the serial reference kernels against their OpenMP versions.
//
//   bench_kernels [n_modes] [k_points] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#include <omp.h>

#include "latscat/kernels.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using latscat::Complex;

template <typename F>
double best_of(int repeats, F&& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto start = Clock::now();
    f();
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    if (s < best) best = s;
  }
  return best;
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-20s %12.6f %12.6f %8.2fx\n", name, serial, parallel, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 2000;
  const int k_points = argc > 2 ? std::atoi(argv[2]) : 200000;
  const int repeats = argc > 3 ? std::atoi(argv[3]) : 3;

  std::mt19937_64 rng(12345);
  std::normal_distribution<double> normal;
  std::vector<double> eigvec(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (double& v : eigvec) v = normal(rng);
  std::vector<Complex> psi(static_cast<std::size_t>(n));
  for (Complex& c : psi) c = {normal(rng), normal(rng)};
  const latscat::kernels::ModeMatrix modes{eigvec, n};
  std::vector<Complex> out(static_cast<std::size_t>(n));

  std::vector<double> k(static_cast<std::size_t>(k_points));
  for (int i = 0; i < k_points; ++i) k[static_cast<std::size_t>(i)] = 0.01 + 3.12 * i / k_points;
  std::vector<double> t(k.size());
  const latscat::BarrierSpec barrier{6, 9, 1.0, 1};
  const latscat::DispersionParams params;

  std::printf("threads %d, modes %d, k points %d, best of %d\n", omp_get_max_threads(), n,
              k_points, repeats);
  std::printf("%-20s %12s %12s %9s\n", "kernel", "serial [s]", "omp [s]", "speedup");
  namespace ks = latscat::kernels;
  row("project", best_of(repeats, [&] { ks::serial::project(modes, psi, out); }),
      best_of(repeats, [&] { ks::omp::project(modes, psi, out); }));
  row("reconstruct", best_of(repeats, [&] { ks::serial::reconstruct(modes, psi, out); }),
      best_of(repeats, [&] { ks::omp::reconstruct(modes, psi, out); }));
  row("transmission_scan",
      best_of(repeats, [&] { ks::serial::transmission_scan(k, barrier, params, t); }),
      best_of(repeats, [&] { ks::omp::transmission_scan(k, barrier, params, t); }));
  return 0;
}
