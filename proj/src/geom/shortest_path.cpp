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

#include "kgvd/geom/shortest_path.hpp"

#include <algorithm>
#include <limits>

#include "kgvd/geom/error.hpp"

namespace kgvd {

namespace {

struct Portal {
  Point left, right;
  int left_id, right_id;
};

int start_triangle(const Triangulation& tri, const PathEnd& e, double tol) {
  if (e.vertex >= 0) return tri.vertex_triangles[e.vertex].front();
  int t = tri.locate(e.point, tol);
  if (t < 0)
    throw Error(ErrorKind::kPointOutsidePolygon, "point outside polygon");
  return t;
}

// For vertex ends pick the incident triangles closest to each other so the
// vertex never shows up on an interior portal.
void pick_triangles(const Triangulation& tri, const PathEnd& a,
                    const PathEnd& b, double tol, int* ta, int* tb) {
  // Points on (or numerically near) a diagonal may start in either triangle;
  // taking the one nearer the other end keeps them off every portal.
  const double near = 1e-12 * std::max(1.0, tri.polygon.diameter());
  auto candidates = [&](const PathEnd& e) {
    if (e.vertex >= 0) return tri.vertex_triangles[e.vertex];
    std::vector<int> c = tri.locate_all(e.point, near);
    if (c.empty()) c.push_back(start_triangle(tri, e, tol));
    return c;
  };
  std::vector<int> ca = candidates(a), cb = candidates(b);
  int best = std::numeric_limits<int>::max();
  for (int x : ca)
    for (int y : cb) {
      int d = tri.dual_distance(x, y);
      if (d < best) {
        best = d;
        *ta = x;
        *tb = y;
      }
    }
}

}  // namespace

GeodesicPath shortest_path(const Triangulation& tri, const PathEnd& a,
                           const PathEnd& b, double tol) {
  GeodesicPath out;
  int ta = 0, tb = 0;
  pick_triangles(tri, a, b, tol, &ta, &tb);
  if (a.point == b.point) {
    out.waypoints = {a.point};
    out.vertex_ids = {a.vertex};
    return out;
  }
  std::vector<int> sleeve = tri.dual_path(ta, tb);
  std::vector<Portal> portals;
  portals.push_back({a.point, a.point, a.vertex, a.vertex});
  for (size_t i = 0; i + 1 < sleeve.size(); ++i) {
    int t = sleeve[i], nb = sleeve[i + 1];
    for (int k = 0; k < 3; ++k) {
      if (tri.adjacency[t][k] != nb) continue;
      int u = tri.triangles[t][k], w = tri.triangles[t][(k + 1) % 3];
      portals.push_back({tri.polygon[w], tri.polygon[u], w, u});
    }
  }
  portals.push_back({b.point, b.point, b.vertex, b.vertex});

  Point apex = a.point, left = a.point, right = a.point;
  int apex_id = a.vertex, left_id = a.vertex, right_id = a.vertex;
  size_t apex_i = 0, left_i = 0, right_i = 0;
  out.waypoints.push_back(a.point);
  out.vertex_ids.push_back(a.vertex);
  for (size_t i = 1; i < portals.size(); ++i) {
    const Portal& p = portals[i];
    if (cross(right - apex, p.right - apex) >= 0) {
      if (apex == right || cross(left - apex, p.right - apex) < 0) {
        right = p.right;
        right_id = p.right_id;
        right_i = i;
      } else {
        apex = left;
        apex_id = left_id;
        apex_i = left_i;
        out.waypoints.push_back(apex);
        out.vertex_ids.push_back(apex_id);
        left = right = apex;
        left_id = right_id = apex_id;
        left_i = right_i = apex_i;
        i = apex_i;
        continue;
      }
    }
    if (cross(left - apex, p.left - apex) <= 0) {
      if (apex == left || cross(right - apex, p.left - apex) > 0) {
        left = p.left;
        left_id = p.left_id;
        left_i = i;
      } else {
        apex = right;
        apex_id = right_id;
        apex_i = right_i;
        out.waypoints.push_back(apex);
        out.vertex_ids.push_back(apex_id);
        left = right = apex;
        left_id = right_id = apex_id;
        left_i = right_i = apex_i;
        i = apex_i;
        continue;
      }
    }
  }
  if (out.waypoints.back() != b.point) {
    out.waypoints.push_back(b.point);
    out.vertex_ids.push_back(b.vertex);
  }
  for (size_t i = 0; i + 1 < out.waypoints.size(); ++i)
    out.length += dist(out.waypoints[i], out.waypoints[i + 1]);
  return out;
}

GeodesicPath shortest_path(const Triangulation& tri, const Point& a,
                           const Point& b, double tol) {
  return shortest_path(tri, PathEnd{a, -1}, PathEnd{b, -1}, tol);
}

double geodesic_distance(const Triangulation& tri, const Point& a,
                         const Point& b, double tol) {
  return shortest_path(tri, a, b, tol).length;
}

}  // namespace kgvd
