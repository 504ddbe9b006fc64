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

#ifndef KGVD_GVD_DIAGRAM_HPP_
#define KGVD_GVD_DIAGRAM_HPP_

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "kgvd/bisector/bisector.hpp"

namespace kgvd {

using SpmPtr = std::shared_ptr<const ExtendedSpm>;

enum class EndKind { kBoundary, kCenter };

struct EdgeEnd {
  EndKind kind = EndKind::kBoundary;
  int edge = -1;     // polygon edge for boundary ends
  double lambda = 0;
  int center = -1;   // index into centers for center ends
  int third = -1;    // third site of that center
  double s = 0;      // chain parameter on the pair's bisector
  Point x;
};

struct DiagramEdge {
  int p = -1, q = -1;  // p < q; p lies right of the edge walking a -> b
  EdgeEnd a, b;
  std::vector<int> vertices;  // indices into the bisector's vertices
};

struct DiagramCenter {
  std::array<int, 3> sites{};  // sorted
  Point x;
  double d = 0;
  std::array<int, 3> apex{};  // apex of the center in each site's map
};

class Diagram {
 public:
  // Errors: DegenerateCocircularSites, DegeneracyDetected and errors of the
  // bisector construction.
  static Diagram build(DomainPtr dom, std::vector<SpmPtr> spms);

  const Domain& domain() const { return *dom_; }
  DomainPtr domain_ptr() const { return dom_; }
  int n() const { return static_cast<int>(spms_.size()); }
  const ExtendedSpm& spm(int i) const { return *spms_[i]; }
  SpmPtr spm_ptr(int i) const { return spms_[i]; }
  const std::vector<SpmPtr>& spms() const { return spms_; }

  const std::vector<DiagramEdge>& edges() const { return edges_; }
  const std::vector<DiagramCenter>& centers() const { return centers_; }
  bool has_bisector(int p, int q) const;
  const Bisector& bisector(int p, int q) const;  // p < q

  int degree1_count() const;
  int degree2_count() const;
  int degree3_count() const { return static_cast<int>(centers_.size()); }

  // Symbolic description; equal strings mean equal combinatorics.
  std::string fingerprint() const;

  // Site nearest to x by map distances.
  int nearest_site(const Point& x) const;
  // Flattened edge from a to b.
  std::vector<Point> edge_polyline(int e, double tol) const;
  // Boundary ring of the cell of site i, counterclockwise.
  std::vector<Point> cell_ring(int i, double tol) const;
  double cell_area(int i) const;
  // Cell containing x by ring membership; -1 if none.
  int cell_label(const Point& x) const;

 private:
  DomainPtr dom_;
  std::vector<SpmPtr> spms_;
  std::map<std::pair<int, int>, Bisector> bis_;
  std::vector<DiagramEdge> edges_;
  std::vector<DiagramCenter> centers_;
  mutable std::vector<std::vector<Point>> rings_;
};

}  // namespace kgvd

#endif  // KGVD_GVD_DIAGRAM_HPP_
