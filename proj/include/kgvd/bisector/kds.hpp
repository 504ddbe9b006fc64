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

#ifndef KGVD_BISECTOR_KDS_HPP_
#define KGVD_BISECTOR_KDS_HPP_

#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kgvd/bisector/bisector.hpp"
#include "kgvd/bisector/guard.hpp"
#include "kgvd/bisector/tournament.hpp"
#include "kgvd/spm/frozen_map.hpp"

namespace kgvd {

enum class KdsMode { kNaive, kResponsive };
const char* kds_mode_name(KdsMode m);

enum class BisectorEventKind {
  kVertex,
  kCollapse12,
  kExpand12,
  kCollapse22,
  kExpand22,
};
const char* bisector_event_name(BisectorEventKind k);

struct BisectorEvent {
  double time = 0;
  BisectorEventKind kind = BisectorEventKind::kVertex;
  int vertex = -1;  // polygon vertex, or the vertex owning the extension
  int owner = -1;   // 0 / 1 for events on an extension segment
  std::string detail;
};

// Combinatorial difference of two consecutive bisectors, as events.
std::vector<BisectorEvent> classify_bisector_change(const Bisector& before,
                                                    const Bisector& after,
                                                    double time, int m);

// Crossing pair stored in a tournament: both extension segments are fixed
// while the maps keep their structure, so only the distance from each site
// to its first path vertex varies.
struct NonVisiblePair {
  int root_p = -1, root_q = -1;  // first path vertices
  int vertex_p = -1, vertex_q = -1;
  bool p_side = true;  // event point currently closer to the first site
  double value = 0;    // |ep - vertex_p| - |ep - vertex_q|
  double anchor = 0;   // tail_p(vertex_p) - tail_q(vertex_q)
  double key = 0;      // position along the bisector
};
std::vector<NonVisiblePair> nonvisible_pairs(const Bisector& b,
                                             const ExtendedSpm& p,
                                             const ExtendedSpm& q);

// Certificates of one bisector. With `skip_nonvisible` the crossing pairs
// inside non-visible pieces are left to tournaments.
void append_bisector_guards(const FrozenMap& p, const FrozenMap& q,
                            const Bisector& b, const std::string& ctx,
                            bool skip_nonvisible, std::vector<Guard>* out);

struct BisectorKdsStats {
  int64_t rebuilds = 0;
  int64_t internal_events = 0;
  int64_t spm_events = 0;
  int64_t guards_computed = 0;
  int64_t guards_reused = 0;
};

// Kinetic bisector of two linearly moving sites.
class BisectorKds {
 public:
  BisectorKds(DomainPtr dom, const Trajectory& p, const Trajectory& q,
              double t0, double horizon, KdsMode mode);

  double now() const { return now_; }
  double horizon() const { return horizon_; }
  KdsMode mode() const { return mode_; }
  const Bisector& bisector() const { return state_.bisector; }
  const ExtendedSpm& spm(int i) const { return *(i == 0 ? state_.p : state_.q); }
  const Trajectory& trajectory(int i) const { return traj_[i]; }

  // Next combinatorial event in (now, horizon]. Certificate failures that
  // leave the bisector unchanged are absorbed here.
  // Errors: SiteExitsPolygon, DegeneracyDetected.
  std::optional<BisectorEvent> next_event();
  // Errors: StaleEvent.
  void handle_event(const BisectorEvent& ev);
  // Processes all events up to the horizon.
  std::vector<BisectorEvent> run();

  // New velocity of site i (0 or 1) from `now` on.
  void update_motion(int site, const Vec& velocity, double now);

  const BisectorKdsStats& stats() const { return stats_; }
  // Summary recomputations inside tournaments so far.
  int64_t tournament_updates() const;
  int tournament_entries() const;
  // Checks every tournament against flat recomputation.
  bool tournaments_consistent() const;
  // Failure time of the earliest certificate, if any (diagnostics).
  std::optional<double> next_failure_time();

 private:
  struct State {
    double time = 0;
    std::shared_ptr<const ExtendedSpm> p, q;
    Bisector bisector;
  };
  struct Group {
    OffsetTournament p_side, q_side;
  };
  struct StoredPair {
    int root_p, root_q;
    bool p_side;
    EventPoint ep;
  };

  State build_state(double t) const;
  void commit(State s);
  void sync_tournaments();
  void refresh();
  std::string context() const;

  DomainPtr dom_;
  Trajectory traj_[2];
  int epoch_[2] = {0, 0};
  double now_, horizon_;
  KdsMode mode_;
  State state_;
  GuardCache cache_;
  std::map<std::pair<int, int>, Group> groups_;
  std::map<std::pair<int, int>, StoredPair> stored_;
  int64_t dropped_updates_ = 0;

  bool fresh_ = false;  // next failure is up to date
  std::optional<double> next_time_;
  bool next_is_exit_ = false;
  std::deque<BisectorEvent> pending_;
  std::optional<State> staged_;
  BisectorKdsStats stats_;
};

}  // namespace kgvd

#endif  // KGVD_BISECTOR_KDS_HPP_
