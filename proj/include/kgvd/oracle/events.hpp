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

#ifndef KGVD_ORACLE_EVENTS_HPP_
#define KGVD_ORACLE_EVENTS_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace kgvd::oracle {

struct SamplingPlan {
  int grid = 64;             // spatial resolution per axis
  int time_samples = 2000;   // uniform coarse samples over the interval
  double eps_time = 1e-9;    // final bracket width
  int max_changes = 16;      // per coarse interval before giving up
  uint64_t seed = 1;
};

// Fingerprint of a structure at a given time.
using Probe = std::function<std::string(double)>;

// Times at which the fingerprint changes in (t0, t1], each bracketed to
// plan.eps_time (the later end of the bracket is reported).
// Errors: ResolutionTooCoarse.
std::vector<double> detect_events_by_bisection(const Probe& probe, double t0,
                                               double t1,
                                               const SamplingPlan& plan);

struct TimeMatch {
  std::vector<double> missed;    // oracle times without a reported event
  std::vector<double> spurious;  // reported times without an oracle change
  double max_offset = 0;         // largest distance of a matched pair
  bool ok() const { return missed.empty() && spurious.empty(); }
};

// Two-sided matching of reported event times against oracle times.
TimeMatch match_times(const std::vector<double>& reported,
                      const std::vector<double>& oracle, double tol);

}  // namespace kgvd::oracle

#endif  // KGVD_ORACLE_EVENTS_HPP_
