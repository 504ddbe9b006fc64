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

#ifndef KGVD_GEOM_POLYGON_HPP_
#define KGVD_GEOM_POLYGON_HPP_

#include <optional>
#include <vector>

#include "kgvd/geom/point.hpp"

namespace kgvd {

struct RayHit {
  int edge = -1;       // edge e joins vertex e and vertex e+1
  double lambda = 0;   // position along the edge in [0,1]
  double t = 0;        // ray parameter (dir is not normalized)
  Point point;
};

// Static simple polygon, counterclockwise, validated on construction.
class Polygon {
 public:
  Polygon() = default;
  explicit Polygon(std::vector<Point> vertices);

  int size() const { return static_cast<int>(v_.size()); }
  const Point& operator[](int i) const { return v_[i]; }
  const std::vector<Point>& vertices() const { return v_; }
  int next(int i) const { return i + 1 == size() ? 0 : i + 1; }
  int prev(int i) const { return i == 0 ? size() - 1 : i - 1; }

  Point edge_point(int e, double lambda) const {
    return lerp(v_[e], v_[next(e)], lambda);
  }
  double area() const { return area_; }
  double diameter() const { return diameter_; }
  bool is_reflex(int i) const { return reflex_[i]; }
  int reflex_count() const;

  // Winding test; points within tol of the boundary count as inside.
  bool contains(const Point& x, double tol = 0.0) const;
  // Strict interior with margin tol from the boundary.
  bool strictly_inside(const Point& x, double tol) const;
  double boundary_distance(const Point& x) const;
  // Closest boundary location of x.
  RayHit closest_boundary(const Point& x) const;

  // True when the closed segment ab lies inside the closed polygon.
  bool segment_inside(const Point& a, const Point& b, double tol) const;

  // First boundary hit of origin + t*dir for t > 0, ignoring edges incident
  // to skip_vertex (if >= 0) and hits with t <= t_min.
  std::optional<RayHit> ray_cast(const Point& origin, const Vec& dir,
                                 int skip_vertex, double t_min = 0.0) const;

  // Is direction d strictly inside the interior angle at vertex i?
  bool direction_enters(int i, const Vec& d) const;

 private:
  std::vector<Point> v_;
  std::vector<bool> reflex_;
  double area_ = 0;
  double diameter_ = 0;
};

double signed_area(const std::vector<Point>& pts);
double point_segment_distance(const Point& x, const Point& a, const Point& b);
// Parameter of the projection of x on segment ab, clamped to [0,1].
double project_on_segment(const Point& x, const Point& a, const Point& b);
// Proper or improper intersection test of closed segments.
bool segments_intersect(const Point& a, const Point& b, const Point& c,
                        const Point& d);
// Line-line intersection parameters: a + s(b-a) = c + u(d-c).
bool line_intersection(const Point& a, const Point& b, const Point& c,
                       const Point& d, double* s, double* u);
// Winding-number point in polygon for an arbitrary closed ring.
bool ring_contains(const std::vector<Point>& ring, const Point& x);
// Signed distance to a ring: negative inside, positive outside.
double ring_signed_distance(const std::vector<Point>& ring, const Point& x);

}  // namespace kgvd

#endif  // KGVD_GEOM_POLYGON_HPP_
