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

#ifndef KGVD_ORACLE_LABELS_HPP_
#define KGVD_ORACLE_LABELS_HPP_

#include <vector>

#include "kgvd/geom/polygon.hpp"
#include "kgvd/oracle/visibility_graph.hpp"

namespace kgvd::oracle {

// Geodesic distances from fixed sources, reflex distances cached per source.
class SourceDistances {
 public:
  SourceDistances(const VisibilityGraph& vg, std::vector<Point> sources);
  int size() const { return static_cast<int>(src_.size()); }
  double operator()(int i, const Point& x) const;

 private:
  const VisibilityGraph& vg_;
  std::vector<Point> src_;
  std::vector<std::vector<double>> rd_;
};

struct GridLabels {
  std::vector<Point> points;    // probe points strictly inside the polygon
  std::vector<int> label;       // nearest source
  std::vector<char> ambiguous;  // two nearest within the tie tolerance
  int unambiguous() const;
};

// Cell centers of a resolution x resolution grid over the bounding box.
// Errors: ResolutionTooCoarse when resolution < 16.
GridLabels grid_labels(const VisibilityGraph& vg,
                       const std::vector<Point>& sources, int resolution,
                       double tie_tol);

// |d(a, x) - d(b, x)|, geodesic.
double equidistance_residual(const SourceDistances& d, int a, int b,
                             const Point& x);

}  // namespace kgvd::oracle

#endif  // KGVD_ORACLE_LABELS_HPP_
