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

#ifndef KGVD_SCENARIOS_GENERATORS_HPP_
#define KGVD_SCENARIOS_GENERATORS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "kgvd/scenarios/scenario.hpp"

namespace kgvd::scenarios {

// Errors for every generator: InvalidArgument when a size is too small.

// Two sites below an hourglass throat whose walls are convex chains of
// m_chain reflex vertices; one site walks toward the throat so the
// bisector sweeps the grid of crossing extension segments.
Scenario gen_wineglass(int m_chain);

// Three sites; the center of all three slides along a fixed bisector and
// crosses the extension segments of the chain hiding the third site.
Scenario gen_center_swing(int m_chain);

// Pit with T-shaped obstacles; pairs of sites drop into the pit one after
// another.
Scenario gen_pit_tshapes(int m, int n);

// Pit with m-1 spikes at the bottom. Three distant sites translate together
// so their center runs along the spikes; the other n-3 sites stand by the
// walls. With floor_sites, a close pair passes over n-2 sites resting
// above the spikes instead.
Scenario gen_pit_spikes(int m, int n, bool floor_sites = false);

// Two glasses mirrored about a horizontal line, right chains perturbed,
// four moving sites; n is ignored.
Scenario gen_mirrored_wineglasses(int m, int n, bool perturb = true);

// Convex chain obstacle, n-1 fixed sites on one side of it and one site
// dropped behind it on the other.
Scenario gen_grid_sweep(int m, int n);

// Random valid scenario on a random star polygon.
Scenario random_scenario(int m, int n, uint64_t seed);

// Named constructions; "random" is accepted by generate() but not listed.
std::vector<std::string> generator_names();
// Dispatch by name with sizes (m, n); n is ignored by single-size
// generators. Errors: InvalidArgument for an unknown name.
Scenario generate(const std::string& name, int m, int n, uint64_t seed = 1);

}  // namespace kgvd::scenarios

#endif  // KGVD_SCENARIOS_GENERATORS_HPP_
