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

#include "kgvd/geom/triangulation.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <utility>

#include "kgvd/geom/error.hpp"

namespace kgvd {

namespace {

bool in_closed_triangle(const Point& a, const Point& b, const Point& c,
                        const Point& x) {
  return orient(a, b, x) >= 0 && orient(b, c, x) >= 0 && orient(c, a, x) >= 0;
}

}  // namespace

Triangulation triangulate(const Polygon& polygon) {
  Triangulation tri;
  tri.polygon = polygon;
  const int m = polygon.size();
  std::vector<int> ring(m);
  for (int i = 0; i < m; ++i) ring[i] = i;
  while (ring.size() > 3) {
    const int k = static_cast<int>(ring.size());
    bool clipped = false;
    for (int i = 0; i < k && !clipped; ++i) {
      int ia = ring[(i + k - 1) % k], ib = ring[i], ic = ring[(i + 1) % k];
      const Point &a = polygon[ia], &b = polygon[ib], &c = polygon[ic];
      if (orient(a, b, c) <= 0) continue;
      bool ear = true;
      for (int j : ring) {
        if (j == ia || j == ib || j == ic) continue;
        if (in_closed_triangle(a, b, c, polygon[j])) {
          ear = false;
          break;
        }
      }
      if (!ear) continue;
      tri.triangles.push_back({ia, ib, ic});
      ring.erase(ring.begin() + i);
      clipped = true;
    }
    if (!clipped) throw Error(ErrorKind::kNonSimplePolygon, "no ear found");
  }
  tri.triangles.push_back({ring[0], ring[1], ring[2]});

  const int nt = tri.size();
  tri.adjacency.assign(nt, {-1, -1, -1});
  tri.vertex_triangles.assign(m, {});
  std::map<std::pair<int, int>, std::pair<int, int>> edge_owner;
  for (int t = 0; t < nt; ++t) {
    for (int k = 0; k < 3; ++k) {
      int u = tri.triangles[t][k], w = tri.triangles[t][(k + 1) % 3];
      tri.vertex_triangles[u].push_back(t);
      auto it = edge_owner.find({w, u});
      if (it != edge_owner.end()) {
        tri.adjacency[t][k] = it->second.first;
        tri.adjacency[it->second.first][it->second.second] = t;
      } else {
        edge_owner[{u, w}] = {t, k};
      }
    }
  }
  tri.dual_parent.assign(nt, -1);
  tri.dual_depth.assign(nt, -1);
  std::vector<int> stack = {0};
  tri.dual_depth[0] = 0;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    for (int nb : tri.adjacency[t]) {
      if (nb >= 0 && tri.dual_depth[nb] < 0) {
        tri.dual_depth[nb] = tri.dual_depth[t] + 1;
        tri.dual_parent[nb] = t;
        stack.push_back(nb);
      }
    }
  }
  return tri;
}

int Triangulation::locate(const Point& x, double tol) const {
  int best = -1;
  double best_w = -std::numeric_limits<double>::infinity();
  for (int t = 0; t < size(); ++t) {
    const Point& a = polygon[triangles[t][0]];
    const Point& b = polygon[triangles[t][1]];
    const Point& c = polygon[triangles[t][2]];
    double area2 = orient(a, b, c);
    double w0 = orient(b, c, x) / area2;
    double w1 = orient(c, a, x) / area2;
    double w2 = orient(a, b, x) / area2;
    double w = std::min({w0, w1, w2});
    // convert barycentric slack to a length scale
    double h = area2 / std::max({norm(b - a), norm(c - b), norm(a - c)});
    double slack = w * h;
    if (slack > best_w) {
      best_w = slack;
      best = t;
    }
  }
  if (best_w < -tol) return -1;
  return best;
}

std::vector<int> Triangulation::locate_all(const Point& x, double tol) const {
  std::vector<int> out;
  for (int t = 0; t < size(); ++t) {
    const Point& a = polygon[triangles[t][0]];
    const Point& b = polygon[triangles[t][1]];
    const Point& c = polygon[triangles[t][2]];
    double w = std::min({orient(a, b, x) / norm(b - a),
                         orient(b, c, x) / norm(c - b),
                         orient(c, a, x) / norm(a - c)});
    if (w >= -tol) out.push_back(t);
  }
  return out;
}

double Triangulation::triangle_area(int t) const {
  return 0.5 * orient(polygon[triangles[t][0]], polygon[triangles[t][1]],
                      polygon[triangles[t][2]]);
}

std::vector<int> Triangulation::dual_path(int a, int b) const {
  std::vector<int> up, down;
  while (a != b) {
    if (dual_depth[a] >= dual_depth[b]) {
      up.push_back(a);
      a = dual_parent[a];
    } else {
      down.push_back(b);
      b = dual_parent[b];
    }
  }
  up.push_back(a);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

int Triangulation::dual_distance(int a, int b) const {
  int d = 0;
  while (a != b) {
    if (dual_depth[a] >= dual_depth[b]) a = dual_parent[a];
    else b = dual_parent[b];
    ++d;
  }
  return d;
}

int Triangulation::dual_edge_count() const {
  int c = 0;
  for (const auto& adj : adjacency)
    for (int nb : adj) c += nb >= 0;
  return c / 2;
}

}  // namespace kgvd
