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

#ifndef KGVD_GEOM_TRAJECTORY_HPP_
#define KGVD_GEOM_TRAJECTORY_HPP_

#include "kgvd/geom/point.hpp"

namespace kgvd {

// Linear motion s(t) = p0 + (t - t_ref) * vel.
struct Trajectory {
  Point p0;
  Vec vel;
  double t_ref = 0;

  Point at(double t) const { return p0 + vel * (t - t_ref); }
  double speed() const { return norm(vel); }
  bool is_static() const { return vel.x == 0 && vel.y == 0; }
  Trajectory with_velocity(double now, const Vec& v) const {
    return Trajectory{at(now), v, now};
  }
};

}  // namespace kgvd

#endif  // KGVD_GEOM_TRAJECTORY_HPP_
