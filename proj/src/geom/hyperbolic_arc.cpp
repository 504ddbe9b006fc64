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

#include "kgvd/geom/hyperbolic_arc.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "kgvd/geom/error.hpp"
#include "kgvd/geom/polygon.hpp"

namespace kgvd {

HyperbolicArc::HyperbolicArc(Point anchor_p, double add_p, Point anchor_q,
                             double add_q)
    : ap_(anchor_p), aq_(anchor_q), kp_(add_p), kq_(add_q) {
  const double c = 0.5 * dist(ap_, aq_);
  const double k = kq_ - kp_;
  const double scale = std::max({1.0, c, std::fabs(kp_), std::fabs(kq_)});
  if (c <= 1e-15 * scale) {
    if (std::fabs(k) <= 1e-15 * scale)
      throw Error(ErrorKind::kIdenticalDistanceFields,
                  "anchors and additive constants coincide");
    empty_ = true;
    return;
  }
  center_ = (ap_ + aq_) * 0.5;
  e1_ = (aq_ - ap_) / (2 * c);
  e2_ = perp(e1_);
  a_ = 0.5 * k;
  if (std::fabs(a_) > c * (1 + 1e-12)) {
    empty_ = true;
    return;
  }
  double b2 = c * c - a_ * a_;
  if (b2 <= 1e-24 * c * c) {
    ray_ = true;  // flat: ray behind the nearer focus
    b_ = 0;
  } else {
    b_ = std::sqrt(b2);
  }
}

Point HyperbolicArc::point(double w) const {
  if (ray_) {
    Point start = a_ > 0 ? aq_ : ap_;
    return start + e1_ * (a_ > 0 ? w : -w);
  }
  double u = a_ * std::sqrt(1 + (w * w) / (b_ * b_));
  return center_ + e1_ * u + e2_ * w;
}

double HyperbolicArc::param_of(const Point& x) const {
  if (ray_) {
    Point start = a_ > 0 ? aq_ : ap_;
    return dot(x - start, e1_) * (a_ > 0 ? 1 : -1);
  }
  return dot(x - center_, e2_);
}

std::vector<Point> HyperbolicArc::sample(int count) const {
  std::vector<Point> out;
  if (count < 2) count = 2;
  for (int i = 0; i < count; ++i)
    out.push_back(point(t0 + (t1 - t0) * i / (count - 1)));
  return out;
}

std::vector<Point> arc_intersect_segment(const HyperbolicArc& arc,
                                         const Point& s0, const Point& s1,
                                         double eps_geom) {
  std::vector<Point> out;
  if (arc.empty_locus()) return out;
  const double len = dist(s0, s1);
  if (len == 0) return out;
  auto f = [&](double l) { return arc.residual(lerp(s0, s1, l)); };
  const double lip = 2 * len;  // |d f / d lambda| <= 2 |segment|
  const double width = eps_geom / len;
  std::vector<double> roots;
  std::function<void(double, double, double, double)> rec =
      [&](double lo, double hi, double flo, double fhi) {
        if (roots.size() > 8) return;
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (std::fabs(fm) > lip * (hi - lo) * 0.5) return;  // no zero inside
        if (hi - lo <= width) {
          roots.push_back(mid);
          return;
        }
        rec(lo, mid, flo, fm);
        rec(mid, hi, fm, fhi);
      };
  rec(0, 1, f(0), f(1));
  // merge clusters and keep those that lie in the arc's parameter range
  std::sort(roots.begin(), roots.end());
  std::vector<double> merged;
  for (double r : roots) {
    if (!merged.empty() && r - merged.back() <= 4 * width) {
      continue;
    }
    merged.push_back(r);
  }
  const double lo_t = std::min(arc.t0, arc.t1), hi_t = std::max(arc.t0, arc.t1);
  for (double r : merged) {
    Point x = lerp(s0, s1, r);
    if (std::fabs(arc.residual(x)) > 2 * eps_geom) continue;
    double w = arc.param_of(x);
    if (w < lo_t - eps_geom || w > hi_t + eps_geom) continue;
    out.push_back(x);
  }
  if (out.size() > 2) out.resize(2);
  return out;
}

std::vector<HyperbolicArc> arc_between(const Point& anchor_p, double add_p,
                                       const Point& anchor_q, double add_q,
                                       const std::array<Point, 3>& clip,
                                       double eps_geom) {
  HyperbolicArc full(anchor_p, add_p, anchor_q, add_q);
  std::vector<HyperbolicArc> out;
  if (full.empty_locus()) return out;
  full.t0 = -1e300;
  full.t1 = 1e300;
  std::vector<double> params;
  for (int k = 0; k < 3; ++k) {
    for (const Point& x :
         arc_intersect_segment(full, clip[k], clip[(k + 1) % 3], eps_geom))
      params.push_back(full.param_of(x));
  }
  std::sort(params.begin(), params.end());
  std::vector<Point> ring(clip.begin(), clip.end());
  if (signed_area(ring) < 0) std::reverse(ring.begin(), ring.end());
  for (size_t i = 0; i + 1 < params.size(); ++i) {
    if (params[i + 1] - params[i] <= eps_geom) continue;
    Point mid = full.point(0.5 * (params[i] + params[i + 1]));
    if (!ring_contains(ring, mid)) continue;
    HyperbolicArc a = full;
    a.t0 = params[i];
    a.t1 = params[i + 1];
    out.push_back(a);
  }
  return out;
}

}  // namespace kgvd
