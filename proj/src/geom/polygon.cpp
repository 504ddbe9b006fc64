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

#include "kgvd/geom/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "kgvd/geom/error.hpp"

namespace kgvd {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNonSimplePolygon: return "NonSimplePolygon";
    case ErrorKind::kPointOutsidePolygon: return "PointOutsidePolygon";
    case ErrorKind::kIdenticalDistanceFields: return "IdenticalDistanceFields";
    case ErrorKind::kSiteOnBoundary: return "SiteOnBoundary";
    case ErrorKind::kSiteExitsPolygon: return "SiteExitsPolygon";
    case ErrorKind::kStaleEvent: return "StaleEvent";
    case ErrorKind::kDegenerateEquidistantVertex:
      return "DegenerateEquidistantVertex";
    case ErrorKind::kUnknownEventPoint: return "UnknownEventPoint";
    case ErrorKind::kDegenerateCollinearCocircular:
      return "DegenerateCollinearCocircular";
    case ErrorKind::kEventBudgetExceeded: return "EventBudgetExceeded";
    case ErrorKind::kDegenerateCocircularSites:
      return "DegenerateCocircularSites";
    case ErrorKind::kLinkCycle: return "LinkCycle";
    case ErrorKind::kCutRoot: return "CutRoot";
    case ErrorKind::kResolutionTooCoarse: return "ResolutionTooCoarse";
    case ErrorKind::kDegeneracyDetected: return "DegeneracyDetected";
    case ErrorKind::kSchema: return "Schema";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

double signed_area(const std::vector<Point>& pts) {
  double a = 0;
  const size_t n = pts.size();
  for (size_t i = 0; i < n; ++i) a += cross(pts[i], pts[(i + 1) % n]);
  return 0.5 * a;
}

double project_on_segment(const Point& x, const Point& a, const Point& b) {
  Vec d = b - a;
  double l2 = norm2(d);
  if (l2 == 0) return 0;
  return std::clamp(dot(x - a, d) / l2, 0.0, 1.0);
}

double point_segment_distance(const Point& x, const Point& a, const Point& b) {
  return dist(x, lerp(a, b, project_on_segment(x, a, b)));
}

static int sgn(double v) { return (v > 0) - (v < 0); }

static bool on_segment(const Point& a, const Point& b, const Point& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c,
                        const Point& d) {
  int o1 = sgn(orient(a, b, c)), o2 = sgn(orient(a, b, d));
  int o3 = sgn(orient(c, d, a)), o4 = sgn(orient(c, d, b));
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

bool line_intersection(const Point& a, const Point& b, const Point& c,
                       const Point& d, double* s, double* u) {
  Vec r = b - a, q = d - c;
  double den = cross(r, q);
  double scale = norm(r) * norm(q);
  if (std::fabs(den) <= 1e-15 * scale || scale == 0) return false;
  Vec w = c - a;
  *s = cross(w, q) / den;
  *u = cross(w, r) / den;
  return true;
}

bool ring_contains(const std::vector<Point>& ring, const Point& x) {
  int wn = 0;
  const size_t n = ring.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    if (a.y <= x.y) {
      if (b.y > x.y && orient(a, b, x) > 0) ++wn;
    } else if (b.y <= x.y && orient(a, b, x) < 0) {
      --wn;
    }
  }
  return wn != 0;
}

double ring_signed_distance(const std::vector<Point>& ring, const Point& x) {
  double best = std::numeric_limits<double>::infinity();
  const size_t n = ring.size();
  for (size_t i = 0; i < n; ++i)
    best = std::min(best, point_segment_distance(x, ring[i], ring[(i + 1) % n]));
  return ring_contains(ring, x) ? -best : best;
}

Polygon::Polygon(std::vector<Point> vertices) : v_(std::move(vertices)) {
  const int m = size();
  if (m < 3) throw Error(ErrorKind::kNonSimplePolygon, "fewer than 3 vertices");
  for (const Point& p : v_)
    if (!p.finite()) throw Error(ErrorKind::kNonSimplePolygon, "non-finite vertex");
  for (int i = 0; i < m; ++i)
    if (v_[i] == v_[next(i)])
      throw Error(ErrorKind::kNonSimplePolygon,
                  "duplicate consecutive vertex " + std::to_string(i));
  area_ = signed_area(v_);
  if (!(area_ > 0))
    throw Error(ErrorKind::kNonSimplePolygon, "polygon is not counterclockwise");
  double lo_x = v_[0].x, hi_x = lo_x, lo_y = v_[0].y, hi_y = lo_y;
  for (const Point& p : v_) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  diameter_ = std::hypot(hi_x - lo_x, hi_y - lo_y);
  const double tiny = 1e-14 * diameter_ * diameter_;
  for (int i = 0; i < m; ++i) {
    if (std::fabs(orient(v_[prev(i)], v_[i], v_[next(i)])) <= tiny)
      throw Error(ErrorKind::kNonSimplePolygon,
                  "collinear consecutive vertices at " + std::to_string(i));
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (j == i + 1 || (i == 0 && j == m - 1)) continue;
      if (segments_intersect(v_[i], v_[next(i)], v_[j], v_[next(j)]))
        throw Error(ErrorKind::kNonSimplePolygon,
                    "edges " + std::to_string(i) + " and " + std::to_string(j) +
                        " intersect");
    }
  }
  reflex_.resize(m);
  for (int i = 0; i < m; ++i)
    reflex_[i] = orient(v_[prev(i)], v_[i], v_[next(i)]) < 0;
}

int Polygon::reflex_count() const {
  return static_cast<int>(std::count(reflex_.begin(), reflex_.end(), true));
}

double Polygon::boundary_distance(const Point& x) const {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < size(); ++i)
    best = std::min(best, point_segment_distance(x, v_[i], v_[next(i)]));
  return best;
}

RayHit Polygon::closest_boundary(const Point& x) const {
  RayHit best;
  double bd = std::numeric_limits<double>::infinity();
  for (int i = 0; i < size(); ++i) {
    double l = project_on_segment(x, v_[i], v_[next(i)]);
    Point p = edge_point(i, l);
    double d = dist(x, p);
    if (d < bd) {
      bd = d;
      best.edge = i;
      best.lambda = l;
      best.point = p;
      best.t = d;
    }
  }
  return best;
}

bool Polygon::contains(const Point& x, double tol) const {
  if (ring_contains(v_, x)) return true;
  return tol > 0 && boundary_distance(x) <= tol;
}

bool Polygon::strictly_inside(const Point& x, double tol) const {
  return ring_contains(v_, x) && boundary_distance(x) > tol;
}

bool Polygon::direction_enters(int i, const Vec& d) const {
  Vec a = v_[next(i)] - v_[i];  // cone runs ccw from a to b
  Vec b = v_[prev(i)] - v_[i];
  double ab = cross(a, b), ad = cross(a, d), db = cross(d, b);
  if (ab > 0) return ad > 0 && db > 0;  // convex corner
  return !(ad <= 0 && db <= 0);          // reflex corner
}

bool Polygon::segment_inside(const Point& a, const Point& b, double tol) const {
  const int m = size();
  if (!contains(a, tol) || !contains(b, tol)) return false;
  std::vector<double> cuts = {0.0, 1.0};
  Vec ab = b - a;
  double len = norm(ab);
  if (len == 0) return true;
  for (int i = 0; i < m; ++i) {
    const Point& c = v_[i];
    const Point& d = v_[next(i)];
    double s, u;
    if (line_intersection(a, b, c, d, &s, &u)) {
      double ut = tol / std::max(norm(d - c), 1e-300);
      double st = tol / len;
      if (s > st && s < 1 - st && u > ut && u < 1 - ut) return false;  // proper
      if (s > 0 && s < 1 && u >= -ut && u <= 1 + ut) cuts.push_back(s);
    }
    // vertices lying on the segment split it as well
    double dv = point_segment_distance(c, a, b);
    if (dv <= tol) cuts.push_back(project_on_segment(c, a, b));
  }
  std::sort(cuts.begin(), cuts.end());
  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    if (cuts[k + 1] - cuts[k] <= 1e-12) continue;
    Point mid = a + ab * (0.5 * (cuts[k] + cuts[k + 1]));
    if (!contains(mid, tol)) return false;
  }
  return true;
}

std::optional<RayHit> Polygon::ray_cast(const Point& origin, const Vec& dir,
                                        int skip_vertex, double t_min) const {
  std::optional<RayHit> best;
  const int m = size();
  Point far = origin + dir;
  for (int e = 0; e < m; ++e) {
    int f = next(e);
    if (skip_vertex >= 0 && (e == skip_vertex || f == skip_vertex)) continue;
    double s, u;
    if (!line_intersection(origin, far, v_[e], v_[f], &s, &u)) continue;
    if (s <= t_min || u < 0 || u > 1) continue;
    if (!best || s < best->t) {
      RayHit h;
      h.edge = e;
      h.lambda = u;
      h.t = s;
      h.point = edge_point(e, u);
      best = h;
    }
  }
  return best;
}

}  // namespace kgvd
