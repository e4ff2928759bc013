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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "latscat/error.hpp"
#include "latscat/evolve.hpp"
#include "oracles.hpp"

using namespace latscat;
using std::numbers::pi;

namespace {

const EigenSystem& empty_1000() {
  static const EigenSystem eig = diagonalize(build_hamiltonian({1000, 1.0, std::nullopt}));
  return eig;
}

LatticeConfig dimer_lattice() {
  LatticeConfig c;
  c.n_sites = 1000;
  c.barrier = BarrierSpec{2, 1, 1.0, 500};
  return c;
}

const EigenSystem& dimer_1000() {
  static const EigenSystem eig = diagonalize(build_hamiltonian(dimer_lattice()));
  return eig;
}

}  // namespace

TEST_SUITE("evolve") {

TEST_CASE("three-site ring") {
  const auto eig = diagonalize(build_hamiltonian({3, 1.0, std::nullopt}));
  REQUIRE(eig.eigenvalues.size() == 3);
  CHECK(eig.eigenvalues[0] == doctest::Approx(-2.0).epsilon(1e-14));
  CHECK(eig.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(eig.eigenvalues[2] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("empty-lattice spectrum") {
  const int n = 64;
  const LatticeConfig cfg{n, 1.0, std::nullopt};
  const auto h = build_hamiltonian(cfg);
  const auto eig = diagonalize(h);
  std::vector<double> expected;
  for (int j = 0; j < n; ++j) expected.push_back(-2.0 * std::cos(2 * pi * j / n));
  std::sort(expected.begin(), expected.end());
  for (int j = 0; j < n; ++j) {
    CHECK(std::abs(eig.eigenvalues[static_cast<std::size_t>(j)] - expected[static_cast<std::size_t>(j)]) <= 1e-8);
    CHECK(eig.residual(h, j) <= 1e-12);
  }
}

TEST_CASE("hamiltonian structure") {
  LatticeConfig cfg{10, 1.0, BarrierSpec{1, 1, 0.75, 4}};
  const auto h = build_hamiltonian(cfg);
  double trace = 0;
  for (int i = 0; i < 10; ++i) trace += h(i, i);
  CHECK(trace == doctest::Approx(0.75));
  CHECK(h(0, 9) == -1.0);
  CHECK(h(9, 0) == -1.0);
  CHECK(h(3, 4) == -1.0);

  cfg.barrier = BarrierSpec{3, 5, 1.0, 4};
  CHECK_THROWS_AS(build_hamiltonian(cfg), Error);
  try {
    build_hamiltonian(cfg);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BarrierOutOfRange);
  }
}

TEST_CASE("initial packet") {
  const GaussianPacketSpec spec{600, pi / 2, 50};
  const LatticeConfig cfg{3000, 1.0, std::nullopt};
  CHECK(std::norm(gaussian_profile(spec, 600)) ==
        doctest::Approx(1 / std::sqrt(2 * pi * 2500)).epsilon(1e-14));
  const auto psi = initial_packet(spec, cfg);
  CHECK(std::abs(psi.norm() - 1.0) <= 1e-12);
  const auto mom = density_moments(psi, 1, 3000);
  CHECK(mom.centroid == doctest::Approx(600).epsilon(1e-10));
  CHECK(mom.width == doctest::Approx(50).epsilon(1e-3));

  CHECK_THROWS_AS(initial_packet({100, pi / 2, 50}, cfg), Error);
  CHECK_THROWS_AS(initial_packet({2800, pi / 2, 50}, cfg), Error);
}

TEST_CASE("t = 0 returns the initial state") {
  const auto psi0 = initial_packet({300, pi / 2, 25}, {1000, 1.0, std::nullopt});
  const auto psi = evolve_to(empty_1000(), psi0, 0.0);
  for (int s = 1; s <= 1000; ++s) CHECK(std::abs(psi.at_site(s) - psi0.at_site(s)) <= 1e-12);
}

TEST_CASE("free propagation matches the Bessel-function solution") {
  // Tails must be far below 1e-10 at both ends or the ring and the infinite
  // chain differ.
  const auto psi0 = initial_packet({300, pi / 2, 15}, {1000, 1.0, std::nullopt});
  const Propagator prop(empty_1000(), psi0);
  for (double t : {50.0, 250.0}) {
    const auto psi = prop.at(t);
    const auto ref = oracle::bessel_free_evolution(psi0.amplitudes, t);
    double worst = 0;
    for (std::size_t i = 0; i < ref.size(); ++i) worst = std::max(worst, std::abs(psi.amplitudes[i] - ref[i]));
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("ballistic motion without spreading at pi / 2") {
  const auto psi0 = initial_packet({200, pi / 2, 25}, {1000, 1.0, std::nullopt});
  const Propagator prop(empty_1000(), psi0);
  const auto m0 = density_moments(psi0, 1, 1000);
  const auto psi = prop.at(250.0);
  check_boundary_clear(psi);
  const auto m1 = density_moments(psi, 1, 1000);
  CHECK(m1.centroid - m0.centroid == doctest::Approx(500).epsilon(1e-3));
  CHECK(std::abs(m1.width / m0.width - 1.0) <= 0.01);
  CHECK(std::abs(psi.norm() - 1.0) <= 1e-10);
}

TEST_CASE("closed-form free packet") {
  const GaussianPacketSpec spec{600, 2 * pi / 3, 50};
  for (double x : {540.0, 600.0, 655.5}) {
    CHECK(std::abs(free_packet_analytic(spec, 0.0, x) - gaussian_profile(spec, x)) <= 1e-15);
  }
  const DispersionParams p;
  const double u = p.curvature(spec.k0) * 1000 / (2 * 2500);
  const double x_peak = 600 + p.group_velocity(spec.k0) * 1000;
  CHECK(std::norm(free_packet_analytic(spec, 1000, x_peak)) ==
        doctest::Approx(std::norm(gaussian_profile(spec, 600)) / std::sqrt(1 + u * u)).epsilon(1e-12));

  const GaussianPacketSpec half{600, pi / 2, 50};
  for (double t : {0.0, 300.0, 1000.0}) {
    CHECK(std::norm(free_packet_analytic(half, t, 600 + 2 * t)) ==
          doctest::Approx(std::norm(gaussian_profile(half, 600))).epsilon(1e-12));
  }
}

TEST_CASE("closed-form packet overlaps the numeric one") {
  const GaussianPacketSpec spec{200, pi / 2, 25};
  const auto psi0 = initial_packet(spec, {1000, 1.0, std::nullopt});
  const Propagator prop(empty_1000(), psi0);
  for (double t : {100.0, 250.0}) {
    const auto psi = prop.at(t);
    Complex overlap = 0;
    double norm_a = 0;
    for (int s = 1; s <= 1000; ++s) {
      const Complex a = free_packet_analytic(spec, t, s);
      overlap += std::conj(psi.at_site(s)) * a;
      norm_a += std::norm(a);
    }
    CHECK(std::norm(overlap) / norm_a >= 0.999);
  }
}

TEST_CASE("unitarity, energy and elasticity with a barrier") {
  const auto cfg = dimer_lattice();
  const GaussianPacketSpec spec{250, pi / 2, 25};
  const auto psi0 = initial_packet(spec, cfg);
  const Propagator prop(dimer_1000(), psi0);
  const double e0 = energy_expectation(cfg, psi0);
  const double k0 = mean_abs_wavevector(psi0.amplitudes);
  const auto p0 = split_probabilities(psi0, *cfg.barrier);
  CHECK(p0.left >= 1 - 1e-8);
  for (double t : {50.0, 125.0, 250.0}) {
    const auto psi = prop.at(t);
    CHECK(std::abs(psi.norm() - 1.0) <= 1e-10);
    CHECK(std::abs(energy_expectation(cfg, psi) - e0) <= 1e-10);
    const auto p = split_probabilities(psi, *cfg.barrier);
    CHECK(std::abs(p.total() - 1.0) <= 1e-10);
  }
  const auto late = prop.at(250.0);
  CHECK(std::abs(mean_abs_wavevector(late.amplitudes) - k0) <= 1e-3);
  const auto p = split_probabilities(late, *cfg.barrier);
  CHECK(p.barrier < 1e-6);
  CHECK(p.left == doctest::Approx(0.2).epsilon(0.05));
}

TEST_CASE("completeness of the eigenbasis") {
  const auto psi0 = initial_packet({250, 1.0, 25}, dimer_lattice());
  const Propagator prop(dimer_1000(), psi0);
  double weight = 0;
  for (const Complex& c : prop.coefficients()) weight += std::norm(c);
  CHECK(std::abs(weight - 1.0) <= 1e-12);
}

TEST_CASE("boundary guard") {
  const auto psi0 = initial_packet({200, pi / 2, 25}, {1000, 1.0, std::nullopt});
  const auto psi = evolve_to(empty_1000(), psi0, 390.0);
  CHECK_THROWS_AS(check_boundary_clear(psi), Error);
}

}  // TEST_SUITE
