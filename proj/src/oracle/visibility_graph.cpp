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

#include "kgvd/oracle/visibility_graph.hpp"

#include <limits>
#include <queue>

namespace kgvd::oracle {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

VisibilityGraph::VisibilityGraph(const Polygon& polygon)
    : poly_(polygon), tol_(1e-11 * polygon.diameter()) {
  for (int i = 0; i < poly_.size(); ++i)
    if (poly_.is_reflex(i)) reflex_.push_back(i);
  const size_t r = reflex_.size();
  rr_.assign(r, std::vector<double>(r, kInf));
  for (size_t i = 0; i < r; ++i) {
    rr_[i][i] = 0;
    for (size_t j = i + 1; j < r; ++j) {
      const Point& a = poly_[reflex_[i]];
      const Point& b = poly_[reflex_[j]];
      if (poly_.segment_inside(a, b, tol_)) rr_[i][j] = rr_[j][i] = dist(a, b);
    }
  }
}

std::vector<double> VisibilityGraph::reflex_distances(const Point& a) const {
  const size_t r = reflex_.size();
  std::vector<double> d(r, kInf);
  std::vector<char> done(r, 0);
  for (size_t i = 0; i < r; ++i)
    if (poly_.segment_inside(a, poly_[reflex_[i]], tol_))
      d[i] = dist(a, poly_[reflex_[i]]);
  // dense Dijkstra
  for (size_t it = 0; it < r; ++it) {
    size_t u = r;
    for (size_t i = 0; i < r; ++i)
      if (!done[i] && (u == r || d[i] < d[u])) u = i;
    if (u == r || d[u] == kInf) break;
    done[u] = 1;
    for (size_t v = 0; v < r; ++v)
      if (!done[v] && rr_[u][v] < kInf && d[u] + rr_[u][v] < d[v])
        d[v] = d[u] + rr_[u][v];
  }
  return d;
}

double VisibilityGraph::distance_with(const Point& source,
                                      const std::vector<double>& rd,
                                      const Point& x) const {
  if (poly_.segment_inside(source, x, tol_)) return dist(source, x);
  double best = kInf;
  for (size_t i = 0; i < reflex_.size(); ++i) {
    if (rd[i] == kInf) continue;
    const Point& v = poly_[reflex_[i]];
    double cand = rd[i] + dist(v, x);
    if (cand >= best) continue;
    if (poly_.segment_inside(v, x, tol_)) best = cand;
  }
  return best;
}

double VisibilityGraph::distance(const Point& a, const Point& b) const {
  return distance_with(a, reflex_distances(a), b);
}

double visibility_graph_distance(const Polygon& polygon, const Point& a,
                                 const Point& b) {
  return VisibilityGraph(polygon).distance(a, b);
}

}  // namespace kgvd::oracle
