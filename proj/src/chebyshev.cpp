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

#include "latscat/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace latscat {

namespace {

template <typename Real>
void cheb_pair(int n, const Real& x, Real& un, Real& un_minus_1) {
  // (U_n, U_{n-1}) with U_{-1} = 0
  Real prev = 0;
  Real cur = 1;
  for (int j = 1; j <= n; ++j) {
    Real next = 2 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  un = cur;
  un_minus_1 = prev;
}

// U_n and dU_n/dx, both by recurrence.
void cheb_with_derivative(int n, double x, double& value, double& slope) {
  double u_prev = 0.0, u_cur = 1.0;
  double d_prev = 0.0, d_cur = 0.0;
  for (int j = 1; j <= n; ++j) {
    const double u_next = 2.0 * x * u_cur - u_prev;
    const double d_next = 2.0 * u_cur + 2.0 * x * d_cur - d_prev;
    u_prev = u_cur;
    u_cur = u_next;
    d_prev = d_cur;
    d_cur = d_next;
  }
  value = u_cur;
  slope = d_cur;
}

}  // namespace

double cheb_u(int n, double x) {
  if (n < 0) throw std::invalid_argument("cheb_u: n must be non-negative");
  double un = 0.0, unused = 0.0;
  cheb_pair(n, x, un, unused);
  return un;
}

std::vector<double> cheb_u_roots(int n) {
  if (n < 1) throw std::invalid_argument("cheb_u_roots: n must be positive");
  std::vector<double> roots;
  roots.reserve(static_cast<std::size_t>(n));
  // positive roots only; the set is antisymmetric and odd n has a root at 0
  for (int j = 1; j <= n / 2; ++j) {
    double x = std::cos(j * std::numbers::pi / (n + 1));
    double value = 0.0, slope = 0.0;
    cheb_with_derivative(n, x, value, slope);
    if (slope != 0.0) x -= value / slope;
    roots.push_back(x);
    roots.push_back(-x);
  }
  if (n % 2 == 1) roots.push_back(0.0);
  std::sort(roots.begin(), roots.end());
  return roots;
}

double cheb_identity_residual(int n, double x) {
  if (n < 2) throw std::invalid_argument("cheb_identity_residual: n must be >= 2");
  using Wide = boost::multiprecision::cpp_bin_float_100;
  const Wide wx = x;
  Wide u_k, u_k_minus_1;
  cheb_pair(n - 2, wx, u_k, u_k_minus_1);
  const Wide d = u_k * u_k - 2 * wx * u_k * u_k_minus_1 + u_k_minus_1 * u_k_minus_1;
  return std::abs(static_cast<double>(d - 1));
}

}  // namespace latscat
