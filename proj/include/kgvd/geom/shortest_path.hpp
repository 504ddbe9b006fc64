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

#ifndef KGVD_GEOM_SHORTEST_PATH_HPP_
#define KGVD_GEOM_SHORTEST_PATH_HPP_

#include <vector>

#include "kgvd/geom/triangulation.hpp"

namespace kgvd {

struct GeodesicPath {
  std::vector<Point> waypoints;
  std::vector<int> vertex_ids;  // polygon vertex id per waypoint, -1 otherwise
  double length = 0;
};

// Optional polygon-vertex identities for the endpoints.
struct PathEnd {
  Point point;
  int vertex = -1;
};

// Funnel algorithm over the triangulation sleeve.
GeodesicPath shortest_path(const Triangulation& tri, const PathEnd& a,
                           const PathEnd& b, double tol);
GeodesicPath shortest_path(const Triangulation& tri, const Point& a,
                           const Point& b, double tol = 0.0);
double geodesic_distance(const Triangulation& tri, const Point& a,
                         const Point& b, double tol = 0.0);

}  // namespace kgvd

#endif  // KGVD_GEOM_SHORTEST_PATH_HPP_
