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

#ifndef KGVD_SPM_SPM_HPP_
#define KGVD_SPM_SPM_HPP_

#include <optional>
#include <string>
#include <vector>

#include "kgvd/geom/domain.hpp"
#include "kgvd/geom/trajectory.hpp"

namespace kgvd {

inline constexpr int kRootApex = -1;

// Combinatorial part of a shortest path map.
struct SpmTopology {
  std::vector<int> parent;      // previous vertex on the path, -1 = site
  std::vector<int> root_child;  // first vertex on the path
  std::vector<double> tail;     // length of the path from root_child on
  std::vector<char> has_chord;
  std::vector<int> hit_edge;    // edge hit by the extension, -1 if none

  bool same_as(const SpmTopology& o) const {
    return parent == o.parent && has_chord == o.has_chord &&
           hit_edge == o.hit_edge;
  }
  std::string fingerprint() const;
};

struct BoundaryItem {
  bool is_vertex = true;
  int vertex = -1;  // polygon vertex, or the vertex owning the chord
  int edge = -1;
  double lambda = 0;
  Point p;
};

struct SpmFace {
  int apex = kRootApex;
  std::vector<int> items;  // ccw boundary items
  std::vector<Point> ring;
};

struct SpmCell {
  int face = -1;
  int apex = kRootApex;
  Point a, b, c;  // a = apex point
};

struct EdgePiece {
  double lo = 0, hi = 1;
  int apex = kRootApex;
};

struct ExtensionSegment {
  int vertex = -1;
  Point start, end;
  int hit_edge = -1;
};

struct SpmLocation {
  int face = -1;
  int cell = -1;
  int apex = kRootApex;
  double distance = 0;
  Point last_vertex;
};

// Extended shortest path map of one site.
class ExtendedSpm {
 public:
  // Errors: SiteOnBoundary, PointOutsidePolygon.
  static ExtendedSpm build(DomainPtr dom, const Point& site);
  // Same topology, geometry re-evaluated for a moved site.
  ExtendedSpm with_site(const Point& site) const;

  const Domain& domain() const { return *dom_; }
  DomainPtr domain_ptr() const { return dom_; }
  const Point& site() const { return site_; }
  const SpmTopology& topology() const { return topo_; }

  double vertex_distance(int v) const { return dist_[v]; }
  Point apex_point(int apex) const;
  double apex_distance(int apex) const;
  int depth(int v) const;  // number of path vertices up to v (root child = 1)

  bool has_chord(int v) const { return topo_.has_chord[v]; }
  std::optional<ExtensionSegment> extension_segment(int v) const;
  Point chord_end(int v) const { return chord_end_[v]; }
  double chord_lambda(int v) const { return chord_lambda_[v]; }
  int chord_count() const;
  // Vertex whose chord bounds the shadow face on the side of the
  // given step, and direction into the shadow.
  bool shadow_contains_next_edge(int v) const { return shadow_next_[v]; }

  const std::vector<BoundaryItem>& items() const { return items_; }
  const std::vector<SpmFace>& faces() const { return faces_; }
  const std::vector<SpmCell>& cells() const { return cells_; }
  int face_of_apex(int apex) const { return apex_face_[apex + 1]; }
  const SpmFace& face_with_apex(int apex) const {
    return faces_[face_of_apex(apex)];
  }
  const std::vector<EdgePiece>& edge_pieces(int e) const { return pieces_[e]; }

  SpmLocation locate(const Point& x) const;
  double distance(const Point& x) const { return locate(x).distance; }
  // Distance to a boundary point given by edge and lambda.
  double boundary_distance(int edge, double lambda) const;
  int boundary_apex(int edge, double lambda) const;
  double cells_area() const;

  double time = 0;  // time stamp used by kinetic wrappers

 private:
  void evaluate_geometry();
  void build_faces();

  DomainPtr dom_;
  Point site_;
  SpmTopology topo_;
  std::vector<double> dist_;
  std::vector<Point> chord_end_;
  std::vector<double> chord_lambda_;
  std::vector<char> shadow_next_;
  std::vector<BoundaryItem> items_;
  std::vector<SpmFace> faces_;
  std::vector<int> apex_face_;  // index apex+1
  std::vector<SpmCell> cells_;
  std::vector<std::vector<EdgePiece>> pieces_;
};

// Segment-level event kinds of a single shortest path map.
enum class SpmEventKind {
  kVertexBecomesVisible,
  kVertexBecomesHidden,
  kExtensionEndpointCrossesVertex,
};
const char* spm_event_name(SpmEventKind k);

struct SpmEvent {
  double time = 0;
  SpmEventKind kind = SpmEventKind::kVertexBecomesVisible;
  int vertex = -1;  // first vertex whose structure changes
  double step = 0;  // offset used to step past the event
};

ExtendedSpm build_spm(DomainPtr dom, const Point& site);

// Earliest structural change of the map of a linearly moving site in
// (now, horizon]. Errors: SiteExitsPolygon when the site reaches the
// boundary before that.
std::optional<SpmEvent> next_spm_event(const ExtendedSpm& spm,
                                       const Trajectory& traj, double now,
                                       double horizon);
// Rebuilds just after the event. Errors: StaleEvent.
ExtendedSpm advance_spm(const ExtendedSpm& spm, const SpmEvent& ev,
                        const Trajectory& traj);

// Time the site first reaches the boundary after now, or +inf.
double boundary_exit_time(const Polygon& poly, const Trajectory& traj,
                          double now);

// Offset used to step past an event before rebuilding.
double event_step(double horizon);

}  // namespace kgvd

#endif  // KGVD_SPM_SPM_HPP_
