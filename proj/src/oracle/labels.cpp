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

#include "kgvd/oracle/labels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kgvd/geom/error.hpp"

namespace kgvd::oracle {

SourceDistances::SourceDistances(const VisibilityGraph& vg,
                                 std::vector<Point> sources)
    : vg_(vg), src_(std::move(sources)) {
  for (const Point& s : src_) rd_.push_back(vg_.reflex_distances(s));
}

double SourceDistances::operator()(int i, const Point& x) const {
  return vg_.distance_with(src_[i], rd_[i], x);
}

int GridLabels::unambiguous() const {
  return static_cast<int>(std::count(ambiguous.begin(), ambiguous.end(), 0));
}

GridLabels grid_labels(const VisibilityGraph& vg,
                       const std::vector<Point>& sources, int resolution,
                       double tie_tol) {
  if (resolution < 16)
    throw Error(ErrorKind::kResolutionTooCoarse,
                "grid resolution must be at least 16");
  const Polygon& poly = vg.polygon();
  double x0 = poly[0].x, x1 = x0, y0 = poly[0].y, y1 = y0;
  for (const Point& v : poly.vertices()) {
    x0 = std::min(x0, v.x), x1 = std::max(x1, v.x);
    y0 = std::min(y0, v.y), y1 = std::max(y1, v.y);
  }
  SourceDistances dist(vg, sources);
  const double inner = 1e-9 * poly.diameter();
  GridLabels out;
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      Point x{x0 + (x1 - x0) * (i + 0.5) / resolution,
              y0 + (y1 - y0) * (j + 0.5) / resolution};
      if (!poly.strictly_inside(x, inner)) continue;
      double best = std::numeric_limits<double>::infinity(), second = best;
      int arg = -1;
      for (int s = 0; s < dist.size(); ++s) {
        double d = dist(s, x);
        if (d < best) {
          second = best, best = d, arg = s;
        } else if (d < second) {
          second = d;
        }
      }
      out.points.push_back(x);
      out.label.push_back(arg);
      out.ambiguous.push_back(second - best <= tie_tol ? 1 : 0);
    }
  }
  return out;
}

double equidistance_residual(const SourceDistances& d, int a, int b,
                             const Point& x) {
  return std::abs(d(a, x) - d(b, x));
}

}  // namespace kgvd::oracle
