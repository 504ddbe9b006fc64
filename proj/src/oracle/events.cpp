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

#include "kgvd/oracle/events.hpp"

#include <algorithm>
#include <cmath>

#include "kgvd/geom/error.hpp"

namespace kgvd::oracle {

namespace {

// Probes can hit a degenerate instant; nudge forward a little.
std::string safe_probe(const Probe& probe, double t, double nudge) {
  try {
    return probe(t);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kSiteExitsPolygon) throw;
  }
  // degenerate instants are isolated; step off them on either side
  double step = nudge;
  for (int k = 0; k < 12; ++k, step *= 2) {
    for (double off : {step, -step}) {
      try {
        return probe(t + off);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::kSiteExitsPolygon) throw;
      }
    }
  }
  return probe(t + step);
}

}  // namespace

std::vector<double> detect_events_by_bisection(const Probe& probe, double t0,
                                               double t1,
                                               const SamplingPlan& plan) {
  std::vector<double> out;
  if (!(t1 > t0)) return out;
  const int n = std::max(1, plan.time_samples);
  const double nudge = 0.1 * plan.eps_time;
  std::function<void(double, const std::string&, double, const std::string&,
                     int*)>
      find = [&](double lo, const std::string& flo, double hi,
                 const std::string& fhi, int* found) {
        if (hi - lo <= plan.eps_time) {
          out.push_back(hi);
          if (++*found > plan.max_changes)
            throw Error(ErrorKind::kResolutionTooCoarse,
                        "too many changes between two samples near t=" +
                            std::to_string(lo));
          return;
        }
        double mid = 0.5 * (lo + hi);
        std::string fm = safe_probe(probe, mid, nudge);
        if (fm != flo) find(lo, flo, mid, fm, found);
        if (fm != fhi) find(mid, fm, hi, fhi, found);
      };
  double prev_t = t0;
  std::string prev = safe_probe(probe, t0, nudge);
  for (int i = 1; i <= n; ++i) {
    double t = t0 + (t1 - t0) * i / n;
    std::string f = safe_probe(probe, t, nudge);
    if (f != prev) {
      int found = 0;
      find(prev_t, prev, t, f, &found);
    }
    prev = f;
    prev_t = t;
  }
  return out;
}

TimeMatch match_times(const std::vector<double>& reported,
                      const std::vector<double>& oracle, double tol) {
  TimeMatch m;
  auto nearest = [](const std::vector<double>& v, double t) {
    double best = INFINITY;
    for (double x : v) best = std::min(best, std::fabs(x - t));
    return best;
  };
  for (double t : oracle) {
    double d = nearest(reported, t);
    if (d > tol) m.missed.push_back(t);
    else m.max_offset = std::max(m.max_offset, d);
  }
  for (double t : reported) {
    double d = nearest(oracle, t);
    if (d > tol) m.spurious.push_back(t);
    else m.max_offset = std::max(m.max_offset, d);
  }
  return m;
}

}  // namespace kgvd::oracle
