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

#ifndef KGVD_SCENARIOS_SHAPES_HPP_
#define KGVD_SCENARIOS_SHAPES_HPP_

#include <cstdint>
#include <vector>

#include "kgvd/geom/polygon.hpp"
#include "kgvd/geom/trajectory.hpp"

namespace kgvd::scenarios {

Polygon unit_square();
Polygon square4();  // (0,0)-(4,4)
Polygon l_shape();  // (0,0),(4,0),(4,2),(2,2),(2,4),(0,4)
// Random star-shaped polygon around the origin with m vertices.
Polygon random_star(int m, uint64_t seed);
// Comb with `teeth` rectangular teeth.
Polygon comb(int teeth);
// Square spiral corridor with `turns` turns.
Polygon spiral(int turns);
// Ten reference polygons with m <= 64.
std::vector<Polygon> test_polygons();
// Uniform random interior point with margin from the boundary.
Point random_interior_point(const Polygon& p, uint64_t* state, double margin);

// Straight motion between two random interior points over [0, horizon].
Trajectory random_linear_motion(const Polygon& p, uint64_t* state,
                                double margin, double horizon);

}  // namespace kgvd::scenarios

#endif  // KGVD_SCENARIOS_SHAPES_HPP_
