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

#ifndef KGVD_ORACLE_VISIBILITY_GRAPH_HPP_
#define KGVD_ORACLE_VISIBILITY_GRAPH_HPP_

#include <vector>

#include "kgvd/geom/polygon.hpp"

namespace kgvd::oracle {

// Brute-force geodesic distances over the visibility graph of the reflex
// vertices. Shares nothing with the triangulation or funnel code.
class VisibilityGraph {
 public:
  explicit VisibilityGraph(const Polygon& polygon);

  double distance(const Point& a, const Point& b) const;
  // Geodesic distances from a to every reflex vertex (index = reflex slot).
  std::vector<double> reflex_distances(const Point& a) const;
  // Distance to x given precomputed reflex distances of a source.
  double distance_with(const Point& source, const std::vector<double>& rd,
                       const Point& x) const;
  bool visible(const Point& a, const Point& b) const {
    return poly_.segment_inside(a, b, tol_);
  }
  const std::vector<int>& reflex() const { return reflex_; }
  const Polygon& polygon() const { return poly_; }

 private:
  Polygon poly_;
  double tol_;
  std::vector<int> reflex_;
  std::vector<std::vector<double>> rr_;  // reflex-reflex edge lengths (inf)
};

double visibility_graph_distance(const Polygon& polygon, const Point& a,
                                 const Point& b);

}  // namespace kgvd::oracle

#endif  // KGVD_ORACLE_VISIBILITY_GRAPH_HPP_
