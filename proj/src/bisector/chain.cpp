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

#include "kgvd/bisector/chain.hpp"

#include <algorithm>
#include <cmath>

#include "kgvd/geom/polygon.hpp"
#include "kgvd/geom/roots.hpp"

namespace kgvd {

double chain_end(const Bisector& b) {
  return static_cast<double>(b.arcs.size());
}

int chain_arc(const Bisector& b, double s) {
  int n = static_cast<int>(b.arcs.size());
  return std::clamp(static_cast<int>(std::floor(s)), 0, n - 1);
}

Point chain_point(const Bisector& b, double s) {
  const int n = static_cast<int>(b.arcs.size());
  if (s <= 0) return b.node(0);
  if (s >= n) return b.node(n);
  int i = chain_arc(b, s);
  double f = s - i;
  if (f == 0) return b.node(i);
  const HyperbolicArc& a = b.arcs[i].arc;
  return a.point(a.t0 + f * (a.t1 - a.t0));
}

double chain_distance(const Bisector& b, const ExtendedSpm& p, double s) {
  int apex = b.arcs[chain_arc(b, s)].apex_p;
  Point x = chain_point(b, s);
  return p.apex_distance(apex) + dist(x, p.apex_point(apex));
}

static void flatten(const Bisector& b, double s0, double s1, const Point& a,
                    const Point& c, double tol, int depth,
                    std::vector<Point>* out) {
  double sm = 0.5 * (s0 + s1);
  Point m = chain_point(b, sm);
  if (depth < 24 && (point_segment_distance(m, a, c) > tol || depth < 2)) {
    flatten(b, s0, sm, a, m, tol, depth + 1, out);
    flatten(b, sm, s1, m, c, tol, depth + 1, out);
    return;
  }
  out->push_back(c);
}

std::vector<Point> chain_polyline(const Bisector& b, double s0, double s1,
                                  double tol) {
  std::vector<Point> out = {chain_point(b, s0)};
  // split at nodes so each piece lies on one arc
  std::vector<double> cuts = {s0};
  for (int i = static_cast<int>(std::floor(s0)) + 1; i < s1; ++i)
    if (i > s0) cuts.push_back(i);
  cuts.push_back(s1);
  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    if (cuts[k + 1] <= cuts[k]) continue;
    flatten(b, cuts[k], cuts[k + 1], chain_point(b, cuts[k]),
            chain_point(b, cuts[k + 1]), tol, 0, &out);
  }
  return out;
}

std::vector<double> chain_roots(const Bisector& b,
                                const std::function<double(double)>& f,
                                double s0, double s1, int per_arc,
                                double tol) {
  s1 = std::min(s1, chain_end(b));
  std::vector<double> samples = {s0};
  for (int i = static_cast<int>(std::floor(s0)); i < s1; ++i)
    for (int k = 0; k <= per_arc; ++k) {
      double s = i + static_cast<double>(k) / (per_arc + 1);
      if (s > s0 && s < s1) samples.push_back(s);
    }
  samples.push_back(s1);
  std::vector<double> roots;
  double prev = f(samples[0]);
  for (size_t k = 1; k < samples.size(); ++k) {
    double cur = f(samples[k]);
    if ((prev < 0) != (cur < 0)) {
      double lo = samples[k - 1], hi = samples[k];
      bool neg = prev < 0;
      while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if ((f(mid) < 0) == neg) lo = mid;
        else hi = mid;
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev = cur;
  }
  return roots;
}

}  // namespace kgvd
