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

#ifndef KGVD_GVD_KDS_HPP_
#define KGVD_GVD_KDS_HPP_

#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kgvd/bisector/guard.hpp"
#include "kgvd/gvd/diagram.hpp"
#include "kgvd/gvd/forest.hpp"

namespace kgvd {

// Listed in the order simultaneous events are reported.
enum class DiagramEventKind {
  kVertex,
  kCollapse12,
  kCollapse13,
  kCollapse22,
  kCollapse23,
  kCollapse33,
  kExpand12,
  kExpand13,
  kExpand22,
  kExpand23,
  kExpand33,
};
constexpr int kDiagramEventKinds = 11;
const char* diagram_event_name(DiagramEventKind k);
// Column order of census tables.
const std::vector<DiagramEventKind>& census_kinds();

struct DiagramEvent {
  double time = 0;
  DiagramEventKind kind = DiagramEventKind::kVertex;
  std::vector<int> sites;
  std::string detail = "{}";  // JSON object
};

// `before` and `after` are static diagrams just before and after `time`.
std::vector<DiagramEvent> classify_diagram_change(const Diagram& before,
                                                  const Diagram& after,
                                                  double time);

struct DiagramKdsOptions {
  int64_t event_budget = 1000000;
};

struct DiagramKdsStats {
  int64_t rebuilds = 0;
  int64_t internal_events = 0;
  int64_t guards_computed = 0;
  int64_t guards_reused = 0;
  int64_t forest_links = 0;
  int64_t forest_cuts = 0;
};

class DiagramKds {
 public:
  using Classifier = std::function<std::vector<DiagramEvent>(
      const Diagram&, const Diagram&, double)>;

  // Errors: those of Diagram::build.
  DiagramKds(DomainPtr dom, std::vector<Trajectory> sites, double t0,
             double horizon, DiagramKdsOptions opt = {});

  double now() const { return now_; }
  double horizon() const { return horizon_; }
  const Diagram& diagram() const { return diagram_; }
  const Trajectory& trajectory(int i) const { return traj_[i]; }
  int n() const { return static_cast<int>(traj_.size()); }

  // Replaces the change classification (used by the center tracker).
  void set_classifier(Classifier c) { classify_ = std::move(c); }

  // Errors: SiteExitsPolygon, DegeneracyDetected, EventBudgetExceeded.
  std::optional<DiagramEvent> next_event();
  // Errors: StaleEvent.
  void handle_event(const DiagramEvent& ev);
  std::vector<DiagramEvent> run();

  // Static diagram of the sites at time t.
  Diagram build_at(double t) const;

  // Forest over polygon vertices (ids 0..m-1) and sites (m..m+n-1); each
  // vertex hangs in the tree of the site whose cell holds it.
  DynamicSpmForest& forest() { return forest_; }
  // Forest path lengths against map distances.
  bool forest_consistent(double tol);

  const DiagramKdsStats& stats() const { return stats_; }
  int64_t events_reported() const { return reported_; }

 private:
  void commit(Diagram d);
  void refresh();
  void sync_forest();

  DomainPtr dom_;
  std::vector<Trajectory> traj_;
  std::vector<int> epoch_;
  double now_, horizon_;
  DiagramKdsOptions opt_;
  Diagram diagram_;
  Classifier classify_;
  GuardCache cache_;
  DynamicSpmForest forest_;
  std::vector<int> forest_owner_;

  struct SpmCap {
    int epoch = -1;
    std::optional<double> time;
    bool exit = false;
  };
  std::vector<SpmCap> spm_cap_;
  bool fresh_ = false;
  std::optional<double> next_time_;
  bool next_is_exit_ = false;
  std::deque<DiagramEvent> pending_;
  std::optional<Diagram> staged_;
  int64_t reported_ = 0;
  DiagramKdsStats stats_;
};

}  // namespace kgvd

#endif  // KGVD_GVD_KDS_HPP_
