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

#include <vector>

namespace latscat {

/// Chebyshev polynomial of the second kind U_n(x), evaluated by the forward
/// recurrence U_n = 2x U_{n-1} - U_{n-2} with U_0 = 1, U_1 = 2x.
/// U_{-1} is taken as 0 so that the recurrence also holds at n = 1.
double cheb_u(int n, double x);

/// The n roots of U_n in ascending order. Seeded with cos(j pi / (n + 1))
/// and polished by one Newton step.
std::vector<double> cheb_u_roots(int n);

/// |U_{n-2}^2 - 2x U_{n-2} U_{n-3} + U_{n-3}^2 - 1| for n >= 2.
///
/// The quadratic form is a difference of terms of size U_{n-2}(x)^2, which
/// grows like (|x| + sqrt(x^2 - 1))^(2n) outside [-1, 1]. The evaluation
/// therefore runs in 100-digit floating point so that the result measures
/// the identity and not double-precision cancellation.
double cheb_identity_residual(int n, double x);

}  // namespace latscat
