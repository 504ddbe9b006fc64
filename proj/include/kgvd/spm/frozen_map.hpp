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

#ifndef KGVD_SPM_FROZEN_MAP_HPP_
#define KGVD_SPM_FROZEN_MAP_HPP_

#include <memory>
#include <vector>

#include "kgvd/spm/spm.hpp"

namespace kgvd {

// Time-parameterized view of a shortest path map whose combinatorial
// structure is held fixed while the site keeps moving. Valid between two
// consecutive structural events of the map.
class FrozenMap {
 public:
  FrozenMap(std::shared_ptr<const ExtendedSpm> spm, const Trajectory& traj);

  const ExtendedSpm& spm() const { return *spm_; }
  const Trajectory& trajectory() const { return traj_; }
  double speed() const { return traj_.speed(); }

  Point site(double t) const { return traj_.at(t); }
  double vertex_distance(int v, double t) const;
  Point apex_point(int apex, double t) const;
  double apex_distance(int apex, double t) const;
  // Extension segments of root children rotate with the site.
  bool chord_moves(int v) const;
  double chord_lambda(int v, double t) const;
  Point chord_end(int v, double t) const;
  // Direction of the extension segment of v.
  Vec chord_dir(int v, double t) const;
  int boundary_apex(int edge, double lambda, double t) const;
  double boundary_distance(int edge, double lambda, double t) const;
  // Geodesic distance through a given apex.
  double distance_via(int apex, const Point& x, double t) const {
    return apex_distance(apex, t) + dist(x, apex_point(apex, t));
  }

 private:
  std::shared_ptr<const ExtendedSpm> spm_;
  Trajectory traj_;
  std::vector<std::vector<int>> edge_chords_;  // chords on each edge, by lambda
};

}  // namespace kgvd

#endif  // KGVD_SPM_FROZEN_MAP_HPP_
