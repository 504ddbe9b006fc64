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

#ifndef KGVD_GEOM_DOMAIN_HPP_
#define KGVD_GEOM_DOMAIN_HPP_

#include <memory>
#include <vector>

#include "kgvd/geom/shortest_path.hpp"
#include "kgvd/geom/tolerance.hpp"
#include "kgvd/geom/triangulation.hpp"

namespace kgvd {

// Segment swept by the site when it becomes collinear with two mutually
// visible vertices, the farther one first: from `through` along
// through - from to the boundary.
struct CriticalSegment {
  int from = -1;
  int through = -1;
  Point a, b;
};

// Shared, immutable polygon context.
struct Domain {
  Triangulation tri;
  double eps_geom = 1e-9;
  std::vector<std::vector<char>> visible;  // vertex-vertex visibility
  std::vector<CriticalSegment> critical;

  const Polygon& polygon() const { return tri.polygon; }
  int m() const { return tri.polygon.size(); }
};

using DomainPtr = std::shared_ptr<const Domain>;

DomainPtr make_domain(const Polygon& polygon);

}  // namespace kgvd

#endif  // KGVD_GEOM_DOMAIN_HPP_
