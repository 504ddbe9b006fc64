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

#include "kgvd/scenarios/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace kgvd::scenarios {

Polygon unit_square() { return Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }
Polygon square4() { return Polygon({{0, 0}, {4, 0}, {4, 4}, {0, 4}}); }
Polygon l_shape() {
  return Polygon({{0, 0}, {4, 0}, {4, 2}, {2, 2}, {2, 4}, {0, 4}});
}

Polygon random_star(int m, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.35, 0.35);
  std::uniform_real_distribution<double> radius(0.35, 1.0);
  std::vector<Point> pts;
  for (int i = 0; i < m; ++i) {
    double ang = 2 * M_PI * (i + 0.5 + jitter(rng)) / m;
    double r = 10 * radius(rng);
    pts.push_back({r * std::cos(ang), r * std::sin(ang)});
  }
  return Polygon(pts);
}

Polygon comb(int teeth) {
  // Jitter from the fractional golden-ratio sequence keeps vertices in
  // general position.
  auto jit = [](int i, double amp) {
    double f = std::fmod(0.6180339887498949 * (i + 1) + 0.3, 1.0);
    return amp * (f - 0.5);
  };
  const double w = 1.0, gap = 0.7, h = 4.0, base = 1.0;
  const double total = teeth * w + (teeth - 1) * gap;
  std::vector<Point> ring = {{0, 0}, {total, 0}};
  for (int i = teeth - 1; i >= 0; --i) {
    double x0 = i * (w + gap);
    double x1 = x0 + w;
    double top = base + h + 0.13 * i + jit(3 * i, 0.3);
    ring.push_back({x1 + jit(5 * i, 0.08), top});
    ring.push_back({x0 + 0.01 * (i + 1), top - 0.05 + jit(7 * i, 0.2)});
    if (i > 0) {
      ring.push_back({x0 + jit(11 * i, 0.1), base + jit(13 * i, 0.3)});
      ring.push_back({x0 - gap + jit(17 * i, 0.1), base + jit(19 * i, 0.3)});
    }
  }
  if (signed_area(ring) < 0) std::reverse(ring.begin(), ring.end());
  return Polygon(ring);
}

Polygon spiral(int turns) {
  // Rectangular spiral corridor of width 1 built from its two walls.
  std::vector<Point> outer, inner;
  double x = 0, y = 0;
  double len = 2.0;
  const double dirs[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::vector<Point> center = {{x, y}};
  for (int k = 0; k < turns; ++k) {
    x += dirs[k % 4][0] * len;
    y += dirs[k % 4][1] * len;
    center.push_back({x, y});
    len += 1.6 + 0.07 * k;
  }
  // offset the center polyline by +-0.5 (left/right walls)
  auto offset = [&](double s) {
    std::vector<Point> wall;
    for (size_t i = 0; i < center.size(); ++i) {
      Vec din = i > 0 ? normalized(center[i] - center[i - 1])
                      : normalized(center[1] - center[0]);
      Vec dout = i + 1 < center.size() ? normalized(center[i + 1] - center[i])
                                       : din;
      Vec n1 = perp(din) * s, n2 = perp(dout) * s;
      if (i == 0) {
        wall.push_back(center[i] + n2);
      } else if (i + 1 == center.size()) {
        wall.push_back(center[i] + n1);
      } else {
        // miter of two axis-aligned offsets
        wall.push_back(center[i] + n1 + n2);
      }
    }
    return wall;
  };
  std::vector<Point> left = offset(0.5), right = offset(-0.5);
  std::vector<Point> ring = right;
  for (auto it = left.rbegin(); it != left.rend(); ++it) ring.push_back(*it);
  if (signed_area(ring) < 0) std::reverse(ring.begin(), ring.end());
  return Polygon(ring);
}

std::vector<Polygon> test_polygons() {
  std::vector<Polygon> out;
  out.push_back(square4());
  out.push_back(l_shape());
  out.push_back(comb(4));
  out.push_back(comb(12));
  out.push_back(spiral(6));
  out.push_back(spiral(14));
  out.push_back(random_star(12, 7));
  out.push_back(random_star(24, 11));
  out.push_back(random_star(48, 13));
  out.push_back(random_star(64, 17));
  return out;
}

Point random_interior_point(const Polygon& p, uint64_t* state, double margin) {
  std::mt19937_64 rng(*state);
  double lo_x = p[0].x, hi_x = lo_x, lo_y = p[0].y, hi_y = lo_y;
  for (const Point& v : p.vertices()) {
    lo_x = std::min(lo_x, v.x);
    hi_x = std::max(hi_x, v.x);
    lo_y = std::min(lo_y, v.y);
    hi_y = std::max(hi_y, v.y);
  }
  std::uniform_real_distribution<double> ux(lo_x, hi_x), uy(lo_y, hi_y);
  for (;;) {
    Point x{ux(rng), uy(rng)};
    if (p.strictly_inside(x, margin)) {
      *state = rng();
      return x;
    }
  }
}

Trajectory random_linear_motion(const Polygon& p, uint64_t* state,
                                double margin, double horizon) {
  for (;;) {
    Point a = random_interior_point(p, state, margin);
    Point b = random_interior_point(p, state, margin);
    if (p.segment_inside(a, b, 0) && p.boundary_distance(a) > margin &&
        p.boundary_distance(b) > margin)
      return Trajectory{a, (b - a) * (1.0 / horizon), 0.0};
  }
}

}  // namespace kgvd::scenarios
