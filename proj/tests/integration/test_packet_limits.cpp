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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "latscat/harness.hpp"
#include "latscat/planewave.hpp"
#include "oracles.hpp"

using namespace latscat;
using std::numbers::pi;

TEST_SUITE("integration") {

// A wider packet is narrower in k, so the transmitted weight approaches the
// plane-wave T(k0).
TEST_CASE("transmitted weight tends to the plane-wave value") {
  const BarrierSpec shape{2, 1, 1.0, 1};
  const double t_plane = transmission(pi / 2, shape);
  double previous_gap = 1.0;
  for (double alpha : {25.0, 50.0, 100.0, 200.0}) {
    CAPTURE(alpha);
    const auto g = plan_geometry(alpha, pi / 2, shape);
    RunConfig c;
    c.mode = RunMode::Evolve;
    c.lattice.n_sites = g.n_sites;
    c.lattice.barrier = BarrierSpec{2, 1, 1.0, g.start_site};
    c.packet = PacketConfig{g.x0, 0.5, alpha};
    c.times = {g.t_after};
    const auto r = run_evolve(c);
    const auto& p = r.snapshots.back().probabilities;
    CHECK(p.barrier < 1e-6);
    const double expected = 1.0 - oracle::convolution_reflection(pi / 2, alpha, 2, 1, 1.0);
    CHECK(std::abs(p.right - expected) <= 0.02 * expected);
    const double gap = std::abs(p.right - t_plane);
    CHECK(gap <= previous_gap);
    previous_gap = gap;
  }
  CHECK(previous_gap < 1e-3);
}

TEST_CASE("closed-form packet overlap on the 3000-site lattice") {
  RunConfig c;
  c.mode = RunMode::Evolve;
  c.lattice.n_sites = 3000;
  c.packet = PacketConfig{600, 0.5, 50};
  c.times = {0, 250, 500, 750, 1000};
  const auto r = run_evolve(c);
  const auto spec = c.packet->spec();
  const auto eig = diagonalize(build_hamiltonian(c.lattice));
  const Propagator prop(eig, initial_packet(spec, c.lattice));
  for (double t : c.times) {
    const auto psi = prop.at(t);
    Complex overlap = 0;
    double norm_a = 0;
    for (int s = 1; s <= 3000; ++s) {
      const Complex a = free_packet_analytic(spec, t, s);
      overlap += std::conj(psi.at_site(s)) * a;
      norm_a += std::norm(a);
    }
    CHECK(std::norm(overlap) / norm_a >= 0.999);
  }
  for (const auto& s : r.snapshots) CHECK(s.probabilities.total() == doctest::Approx(1.0).epsilon(1e-10));
}

}  // TEST_SUITE
