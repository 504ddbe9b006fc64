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

#include "kgvd/geom/domain.hpp"

namespace kgvd {

DomainPtr make_domain(const Polygon& polygon) {
  auto d = std::make_shared<Domain>();
  d->tri = triangulate(polygon);
  d->eps_geom = 1e-9 * polygon.diameter();
  const int m = polygon.size();
  d->visible.assign(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i) {
    d->visible[i][i] = 1;
    for (int j = i + 1; j < m; ++j) {
      GeodesicPath p = shortest_path(d->tri, PathEnd{polygon[i], i},
                                     PathEnd{polygon[j], j}, 0.0);
      char vis = p.waypoints.size() == 2;
      d->visible[i][j] = d->visible[j][i] = vis;
    }
  }
  for (int w = 0; w < m; ++w) {
    for (int u = 0; u < m; ++u) {
      if (u == w || !d->visible[w][u] || !polygon.is_reflex(u)) continue;
      Vec dir = polygon[u] - polygon[w];
      if (!polygon.direction_enters(u, dir)) continue;
      auto hit = polygon.ray_cast(polygon[u], dir, u);
      if (!hit) continue;
      d->critical.push_back({w, u, polygon[u], hit->point});
    }
  }
  return d;
}

}  // namespace kgvd
