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

#ifndef KGVD_SCENARIOS_SCENARIO_HPP_
#define KGVD_SCENARIOS_SCENARIO_HPP_

#include <string>
#include <vector>

#include "kgvd/geom/polygon.hpp"
#include "kgvd/geom/trajectory.hpp"

namespace kgvd::scenarios {

struct SiteSpec {
  std::string id;
  Point pos;  // position at time t0
  Vec vel;
};

struct Scenario {
  Polygon polygon;
  std::vector<SiteSpec> sites;
  double t0 = 0, t1 = 1;

  int n() const { return static_cast<int>(sites.size()); }
  Trajectory trajectory(int i) const {
    return Trajectory{sites[i].pos, sites[i].vel, t0};
  }
  std::vector<Trajectory> trajectories() const;
  std::vector<std::string> ids() const;
};

// Sites distinct and strictly inside over [t0, t1].
// Errors: InvalidArgument, SiteExitsPolygon, SiteOnBoundary.
void validate_scenario(const Scenario& s);

// Errors: Schema (message carries a JSON path).
Scenario load_scenario(const std::string& bytes);
std::string save_scenario(const Scenario& s);
Scenario load_scenario_file(const std::string& path);

}  // namespace kgvd::scenarios

#endif  // KGVD_SCENARIOS_SCENARIO_HPP_
