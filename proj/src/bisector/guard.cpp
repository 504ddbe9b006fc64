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

#include "kgvd/bisector/guard.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_set>

namespace kgvd {

std::optional<double> GuardCache::failure(const Guard& g, double now,
                                          double cap) {
  auto it = map_.find(g.key);
  if (it != map_.end()) {
    Entry& e = it->second;
    if (e.from <= now) {
      if (e.fail && *e.fail > now) {
        ++reused_;
        if (*e.fail <= cap) return e.fail;
        return std::nullopt;
      }
      if (!e.fail && e.to >= cap) {
        ++reused_;
        return std::nullopt;
      }
      if (!e.fail && e.to > now) {
        // continue the search where it stopped
        ++computed_;
        MarchOptions o = opt_;
        o.lipschitz = g.lipschitz;
        e.fail = first_sign_change(g.f, e.to, cap, o);
        e.to = cap;
        return e.fail;
      }
    }
  }
  ++computed_;
  MarchOptions o = opt_;
  o.lipschitz = g.lipschitz;
  Entry e;
  e.from = now;
  e.to = cap;
  e.fail = first_sign_change(g.f, now, cap, o);
  map_[g.key] = e;
  return e.fail;
}

void GuardCache::retain(const std::vector<std::string>& keys) {
  std::unordered_set<std::string> keep(keys.begin(), keys.end());
  for (auto it = map_.begin(); it != map_.end();) {
    if (keep.count(it->first)) ++it;
    else it = map_.erase(it);
  }
}

MarchOptions march_options(double horizon) {
  const double h = std::max(1.0, std::fabs(horizon));
  MarchOptions o;
  o.h_min = 1e-9 * h;
  o.h_max = 5e-3 * h;
  o.tol = 1e-11 * h;
  return o;
}

std::string key_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

}  // namespace kgvd
