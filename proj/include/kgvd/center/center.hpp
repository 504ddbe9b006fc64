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

#ifndef KGVD_CENTER_CENTER_HPP_
#define KGVD_CENTER_CENTER_HPP_

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "kgvd/gvd/kds.hpp"

namespace kgvd {

// Point of P geodesically equidistant to three sites, if any; it is unique.
// Found on the bisector of the first two sites.
// Errors: DegenerateCollinearCocircular when the sign change along the
// bisector cannot be isolated.
std::optional<Point> compute_center(const ExtendedSpm& p, const ExtendedSpm& q,
                                    const ExtendedSpm& s);

// Only kVertex, kCollapse13, kExpand13, kCollapse23 and kExpand23 occur.
// `sites` lists the site whose path to the center changed, or all three
// when the center appears or vanishes.
using CenterEvent = DiagramEvent;

// Changes of the center between two diagrams of the same three sites.
std::vector<CenterEvent> classify_center_change(const Diagram& before,
                                                const Diagram& after,
                                                double time);

class VoronoiCenterTracker {
 public:
  // Errors: those of Diagram::build.
  VoronoiCenterTracker(DomainPtr dom, std::array<Trajectory, 3> sites,
                       double t0, double horizon, DiagramKdsOptions opt = {});

  double now() const { return kds_.now(); }
  // Center of the maintained diagram, or none.
  std::optional<Point> center() const;
  // Apex of each site's path to the center (kRootApex when direct).
  std::optional<std::array<int, 3>> center_apexes() const;
  const Diagram& diagram() const { return kds_.diagram(); }

  // Errors: SiteExitsPolygon, DegeneracyDetected, EventBudgetExceeded.
  std::optional<CenterEvent> next_event() { return kds_.next_event(); }
  // Errors: StaleEvent.
  void handle_event(const CenterEvent& ev) { kds_.handle_event(ev); }
  Diagram build_at(double t) const { return kds_.build_at(t); }

 private:
  DiagramKds kds_;
};

struct CenterTrace {
  std::vector<CenterEvent> events;
  // One sampled piece per interval between consecutive breakpoints;
  // pieces where the center is absent are empty.
  std::vector<std::vector<std::pair<double, Point>>> pieces;
  int breakpoints() const { return static_cast<int>(events.size()); }
};

// Runs the tracker to t1 and samples the center between events.
// Errors: EventBudgetExceeded past max_events.
CenterTrace trace_center(VoronoiCenterTracker& tracker, double t1,
                         int max_events, int samples_per_piece = 8);

}  // namespace kgvd

#endif  // KGVD_CENTER_CENTER_HPP_
