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

#ifndef KGVD_GEOM_HYPERBOLIC_ARC_HPP_
#define KGVD_GEOM_HYPERBOLIC_ARC_HPP_

#include <array>
#include <vector>

#include "kgvd/geom/point.hpp"

namespace kgvd {

// Piece of the locus |x - anchor_p| + add_p = |x - anchor_q| + add_q.
// Points are parameterized by their offset along the axis perpendicular to
// anchor_p -> anchor_q (or the distance along the ray in the flat case).
class HyperbolicArc {
 public:
  HyperbolicArc() = default;
  HyperbolicArc(Point anchor_p, double add_p, Point anchor_q, double add_q);

  Point anchor_p() const { return ap_; }
  Point anchor_q() const { return aq_; }
  double add_p() const { return kp_; }
  double add_q() const { return kq_; }

  bool empty_locus() const { return empty_; }
  Point point(double w) const;
  double param_of(const Point& x) const;
  double residual(const Point& x) const {
    return dist(x, ap_) + kp_ - dist(x, aq_) - kq_;
  }

  double t0 = 0, t1 = 0;  // parameter range
  Point start() const { return point(t0); }
  Point end() const { return point(t1); }
  std::vector<Point> sample(int count) const;

 private:
  Point ap_, aq_;
  double kp_ = 0, kq_ = 0;
  Point center_;
  Vec e1_, e2_;
  double a_ = 0, b_ = 0;
  bool ray_ = false;
  bool empty_ = false;
};

// Locus portion inside the clip triangle.
std::vector<HyperbolicArc> arc_between(const Point& anchor_p, double add_p,
                                       const Point& anchor_q, double add_q,
                                       const std::array<Point, 3>& clip,
                                       double eps_geom);

// Intersections of the (full-range) arc locus restricted to [t0,t1] with a
// segment, by certified subdivision along the segment.
std::vector<Point> arc_intersect_segment(const HyperbolicArc& arc,
                                         const Point& s0, const Point& s1,
                                         double eps_geom);

}  // namespace kgvd

#endif  // KGVD_GEOM_HYPERBOLIC_ARC_HPP_
