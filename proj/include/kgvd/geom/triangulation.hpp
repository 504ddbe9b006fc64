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

#ifndef KGVD_GEOM_TRIANGULATION_HPP_
#define KGVD_GEOM_TRIANGULATION_HPP_

#include <array>
#include <vector>

#include "kgvd/geom/polygon.hpp"

namespace kgvd {

// Ear-clipping triangulation with its dual tree.
struct Triangulation {
  Polygon polygon;
  std::vector<std::array<int, 3>> triangles;  // ccw vertex ids
  // adjacency[t][k]: triangle across edge (tri[k], tri[k+1]), or -1.
  std::vector<std::array<int, 3>> adjacency;
  std::vector<int> dual_parent;  // dual tree rooted at triangle 0
  std::vector<int> dual_depth;
  std::vector<std::vector<int>> vertex_triangles;

  int size() const { return static_cast<int>(triangles.size()); }
  // Triangle containing x (largest min barycentric weight); -1 if outside
  // by more than tol.
  int locate(const Point& x, double tol) const;
  // All triangles within tol of x.
  std::vector<int> locate_all(const Point& x, double tol) const;
  double triangle_area(int t) const;
  // Triangle path in the dual tree from a to b (inclusive).
  std::vector<int> dual_path(int a, int b) const;
  int dual_distance(int a, int b) const;
  // Number of dual edges, i.e. shared diagonals.
  int dual_edge_count() const;
};

Triangulation triangulate(const Polygon& polygon);

}  // namespace kgvd

#endif  // KGVD_GEOM_TRIANGULATION_HPP_
