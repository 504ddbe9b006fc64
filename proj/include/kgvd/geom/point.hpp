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

#ifndef KGVD_GEOM_POINT_HPP_
#define KGVD_GEOM_POINT_HPP_

#include <cmath>
#include <ostream>

namespace kgvd {

struct Point {
  double x = 0.0;
  double y = 0.0;

  Point() = default;
  constexpr Point(double x_, double y_) : x(x_), y(y_) {}

  Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
  Point operator*(double s) const { return {x * s, y * s}; }
  Point operator/(double s) const { return {x / s, y / s}; }
  Point operator-() const { return {-x, -y}; }
  Point& operator+=(const Point& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  Point& operator-=(const Point& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }

  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline Point operator*(double s, const Point& p) { return p * s; }

inline double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Point& a) { return std::hypot(a.x, a.y); }
inline double norm2(const Point& a) { return a.x * a.x + a.y * a.y; }
inline double dist(const Point& a, const Point& b) { return norm(a - b); }

// Twice the signed area of (a, b, c); positive when c is left of a->b.
inline double orient(const Point& a, const Point& b, const Point& c) {
  return cross(b - a, c - a);
}

inline Point perp(const Point& a) { return {-a.y, a.x}; }

inline Point normalized(const Point& a) {
  double n = norm(a);
  return n > 0 ? a / n : Point{0.0, 0.0};
}

inline Point lerp(const Point& a, const Point& b, double t) { return a + (b - a) * t; }

inline std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << "(" << p.x << ", " << p.y << ")";
}

using Vec = Point;

}  // namespace kgvd

#endif  // KGVD_GEOM_POINT_HPP_
