// Copyright 2026 The kgvd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KGVD_GEOM_ROOTS_HPP_
#define KGVD_GEOM_ROOTS_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "kgvd/geom/point.hpp"

namespace kgvd {

// Parameters lambda in [0,1] where x = lerp(p0, p1, lambda) satisfies
// |x - a| + add_a = |x - b| + add_b. Closed form after two squarings,
// filtered by residual and polished.
std::vector<double> equal_distance_roots(const Point& a, double add_a,
                                         const Point& b, double add_b,
                                         const Point& p0, const Point& p1);

struct MarchOptions {
  double h_min = 1e-9;   // smallest step
  double h_max = 1e-2;   // largest step
  double tol = 1e-10;    // final bracket width
  double lipschitz = 0;  // known bound on |f'| (0 = estimate)
};

// First time in (t0, t1] where sign(f) differs from sign(f(t0)); NaN values
// end the search without a root.
std::optional<double> first_sign_change(const std::function<double(double)>& f,
                                        double t0, double t1,
                                        const MarchOptions& opt);

// Shrinks a sign-change bracket [lo, hi] to width tol; returns hi.
double bisect_sign_change(const std::function<double(double)>& f, double lo,
                          double hi, double tol);

}  // namespace kgvd

#endif  // KGVD_GEOM_ROOTS_HPP_
